#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "basket/transaction_db.hpp"

namespace basket {

enum class InputFormat { basket, tid_pairs };

/// Parses "basket" or "tidpairs"; throws ConfigError otherwise.
InputFormat parse_input_format(std::string_view name);

struct IngestOptions {
  /// Transactions with fewer distinct items are dropped before interning.
  std::size_t min_items = 1;
  /// Tid-pair input only: treat the first line as a header.
  bool skip_header = false;
};

/// One transaction per line, items separated by ','. Blank lines and lines
/// whose first non-blank character is '#' are skipped.
TransactionDb ingest_basket(std::istream& in, const IngestOptions& options = {});

/// "tid,item_label" rows grouped by tid. Transactions appear in order of the
/// first row of each tid; items are interned in row order.
TransactionDb ingest_tid_pairs(std::istream& in, const IngestOptions& options = {});

/// Opens `path` and dispatches on `format`. An unreadable file is an
/// IngestError.
TransactionDb load_transactions(const std::filesystem::path& path, InputFormat format,
                                const IngestOptions& options = {});

}  // namespace basket
