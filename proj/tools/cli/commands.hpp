#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace basket::cli {

/// Exit statuses of the `basket` tool.
enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kUsageError = 2,
  kIngestError = 3,
  kGuardError = 4,
  kEnginesDisagree = 5,
};

/// Runs the tool on `args` (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace basket::cli
