#include "basket/generator.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <sstream>

#include "basket/errors.hpp"

namespace basket {

namespace {

class Source {
 public:
  explicit Source(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [lo, hi] by rejection, independent of the library's
  // distribution implementations.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t range = hi - lo + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + x % range;
  }

  bool bernoulli(double p) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return u < p;
  }

 private:
  std::mt19937_64 engine_;
};

std::optional<std::size_t> universe_index(std::string_view label, std::size_t universe) {
  constexpr std::string_view kPrefix = "item_";
  if (!label.starts_with(kPrefix)) return std::nullopt;
  const std::string_view digits = label.substr(kPrefix.size());
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || end != digits.data() + digits.size()) return std::nullopt;
  if (value == 0 || value > universe || universe_label(value - 1) != label) return std::nullopt;
  return value - 1;
}

}  // namespace

std::string universe_label(std::size_t index) {
  std::string digits = std::to_string(index + 1);
  if (digits.size() < 4) digits.insert(0, 4 - digits.size(), '0');
  return "item_" + digits;
}

void GeneratorConfig::validate() const {
  if (num_transactions == 0) throw ConfigError("number of transactions must be positive");
  if (universe_size == 0) throw ConfigError("universe size must be positive");
  if (basket_min == 0) throw ConfigError("minimum basket size must be at least 1");
  if (basket_min > basket_max)
    throw ConfigError("minimum basket size exceeds maximum basket size");
  if (basket_max > universe_size)
    throw ConfigError("maximum basket size " + std::to_string(basket_max) +
                      " exceeds universe size " + std::to_string(universe_size));
  for (const EmbeddedPattern& p : patterns) {
    if (p.labels.empty()) throw ConfigError("pattern has no items");
    if (!std::isfinite(p.probability) || p.probability < 0.0 || p.probability > 1.0)
      throw ConfigError("pattern probability must lie in [0, 1]");
    for (const std::string& label : p.labels) {
      if (trim(label).empty() || trim(label) != label)
        throw ConfigError("pattern labels must be non-empty and trimmed");
      if (label.find(',') != std::string::npos || label.front() == '#')
        throw ConfigError("pattern label '" + label + "' cannot be written as a basket item");
    }
  }
}

EmbeddedPattern parse_pattern(std::string_view text) {
  const auto colon = text.rfind(':');
  if (colon == std::string_view::npos)
    throw ConfigError("pattern '" + std::string(text) + "' must look like 'a,b:0.5'");
  EmbeddedPattern pattern;
  const std::string prob(trim(text.substr(colon + 1)));
  try {
    std::size_t used = 0;
    pattern.probability = std::stod(prob, &used);
    if (used != prob.size()) throw std::invalid_argument(prob);
  } catch (const std::exception&) {
    throw ConfigError("pattern probability '" + prob + "' is not a number");
  }
  std::string_view items = text.substr(0, colon);
  while (true) {
    const auto comma = items.find(',');
    const std::string_view label = trim(items.substr(0, comma));
    if (label.empty()) throw ConfigError("pattern '" + std::string(text) + "' has an empty item");
    pattern.labels.emplace_back(label);
    if (comma == std::string_view::npos) break;
    items.remove_prefix(comma + 1);
  }
  return pattern;
}

TransactionDb generate_db(const GeneratorConfig& config) {
  config.validate();
  Source source(config.seed);

  struct PlantedItem {
    std::string label;
    std::optional<std::size_t> universe;
  };
  std::vector<std::vector<PlantedItem>> planted;
  for (const EmbeddedPattern& p : config.patterns) {
    auto& items = planted.emplace_back();
    for (const std::string& label : p.labels)
      items.push_back({label, universe_index(label, config.universe_size)});
  }

  TransactionDbBuilder builder;
  std::vector<bool> taken(config.universe_size);
  std::vector<std::string> basket;
  for (std::size_t t = 0; t < config.num_transactions; ++t) {
    basket.clear();
    std::fill(taken.begin(), taken.end(), false);
    auto add_extra = [&](const std::string& label) {
      if (std::find(basket.begin(), basket.end(), label) == basket.end()) basket.push_back(label);
    };

    for (std::size_t p = 0; p < planted.size(); ++p) {
      if (!source.bernoulli(config.patterns[p].probability)) continue;
      for (const PlantedItem& item : planted[p]) {
        if (!item.universe) {
          add_extra(item.label);
        } else if (!taken[*item.universe]) {
          taken[*item.universe] = true;
          basket.push_back(item.label);
        }
      }
    }
    // Universe items in the basket never exceed basket.size() < target, so a
    // free item always exists.
    const std::size_t target = source.uniform(config.basket_min, config.basket_max);
    while (basket.size() < target) {
      const std::size_t index = source.uniform(0, config.universe_size - 1);
      if (taken[index]) continue;
      taken[index] = true;
      basket.push_back(universe_label(index));
    }
    builder.add(basket);
  }
  return std::move(builder).finish();
}

std::uint64_t basket_checksum(const TransactionDb& db) {
  std::ostringstream out;
  db.write_basket(out);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : out.str()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace basket
