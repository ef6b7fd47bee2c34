#pragma once

#include <cstddef>
#include <optional>

#include "basket/item_set.hpp"

namespace basket {

struct MiningParams {
  double min_support = 0.0;
  double min_confidence = 0.0;
  std::optional<std::size_t> max_itemset_size;

  /// Throws ConfigError unless both fractions lie in (0, 1] and the size cap,
  /// when set, is positive.
  void validate() const;

  /// Inclusive absolute count threshold ceil(min_support * n), at least 1.
  Count support_threshold(std::size_t n_transactions) const;
};

/// ceil(fraction * base), clamped below at 1. Products within 1e-9 (relative)
/// of an integer snap to it, so 3/7 of 7 is 3 and not 4.
Count fraction_threshold(double fraction, Count base);

}  // namespace basket
