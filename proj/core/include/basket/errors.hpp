#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace basket {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed transaction input. `line()` is 1-based, or 0 when the problem is
/// not tied to a particular line.
class IngestError : public Error {
 public:
  explicit IngestError(const std::string& message, std::size_t line = 0);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input held no usable transactions.
class EmptyInputError : public IngestError {
 public:
  explicit EmptyInputError(const std::string& message) : IngestError(message) {}
};

/// A value outside the domain of an operation (unknown item id, N = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A caller broke an operation's precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// The brute-force oracle refused an input that is too large to enumerate.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// Invalid mining parameters or generator configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace basket
