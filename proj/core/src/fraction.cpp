#include "basket/fraction.hpp"

namespace basket {

namespace {

__extension__ using Wide = unsigned __int128;

}  // namespace

Count Fraction::percent() const noexcept {
  // round(100 n / d) with halves going up; n, d are non-negative
  const Wide n = num;
  const Wide d = den;
  return static_cast<Count>((200 * n + d) / (2 * d));
}

std::string Fraction::percent_string() const { return std::to_string(percent()) + "%"; }

std::weak_ordering compare_value(const Fraction& a, const Fraction& b) noexcept {
  const Wide lhs = static_cast<Wide>(a.num) * b.den;
  const Wide rhs = static_cast<Wide>(b.num) * a.den;
  if (lhs < rhs) return std::weak_ordering::less;
  if (lhs > rhs) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

}  // namespace basket
