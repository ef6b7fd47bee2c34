#pragma once

#include <compare>
#include <string>

#include "basket/item_set.hpp"

namespace basket {

/// Unreduced ratio of two counts. Equality is on the (num, den) pair, so 3/3
/// and 1/1 are distinct values; use compare_value for numeric ordering.
struct Fraction {
  Count num = 0;
  Count den = 1;

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  /// num/den * 100 rounded half away from zero.
  Count percent() const noexcept;
  /// percent() followed by '%', e.g. "57%".
  std::string percent_string() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

std::weak_ordering compare_value(const Fraction& a, const Fraction& b) noexcept;

}  // namespace basket
