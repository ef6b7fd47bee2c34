#include "basket/mining_params.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "basket/errors.hpp"

namespace basket {

namespace {

bool in_unit_interval(double x) { return std::isfinite(x) && x > 0.0 && x <= 1.0; }

}  // namespace

void MiningParams::validate() const {
  if (!in_unit_interval(min_support))
    throw ConfigError("min_support must lie in (0, 1], got " + std::to_string(min_support));
  if (!in_unit_interval(min_confidence))
    throw ConfigError("min_confidence must lie in (0, 1], got " + std::to_string(min_confidence));
  if (max_itemset_size && *max_itemset_size == 0)
    throw ConfigError("max_itemset_size must be positive");
}

Count MiningParams::support_threshold(std::size_t n_transactions) const {
  validate();
  return fraction_threshold(min_support, n_transactions);
}

Count fraction_threshold(double fraction, Count base) {
  const double product = fraction * static_cast<double>(base);
  const double nearest = std::round(product);
  const double tolerance = 1e-9 * std::max(1.0, std::abs(product));
  const double ceiled = std::abs(product - nearest) <= tolerance ? nearest : std::ceil(product);
  return std::max<Count>(1, static_cast<Count>(ceiled));
}

}  // namespace basket
