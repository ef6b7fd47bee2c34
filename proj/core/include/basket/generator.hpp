#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "basket/transaction_db.hpp"

namespace basket {

/// Itemset planted into generated baskets with a fixed probability. Labels
/// may name universe items ("item_0003") or extra items outside it.
struct EmbeddedPattern {
  std::vector<std::string> labels;
  double probability = 0.0;
};

struct GeneratorConfig {
  std::size_t num_transactions = 1000;
  std::size_t universe_size = 100;
  std::size_t basket_min = 2;
  std::size_t basket_max = 6;
  std::vector<EmbeddedPattern> patterns;
  std::uint64_t seed = 42;

  /// Throws ConfigError for impossible settings.
  void validate() const;
};

/// "item_0001" for index 0, zero-padded to at least four digits.
std::string universe_label(std::size_t index);

/// Parses "a,b:0.5". Throws ConfigError on malformed input.
EmbeddedPattern parse_pattern(std::string_view text);

/// Seeded synthetic corpus.
///
/// Random source: std::mt19937_64 seeded with `seed`. Its output sequence is
/// fixed by the C++ standard; bounded integers use rejection sampling on the
/// raw 64-bit draws and Bernoulli trials compare the top 53 bits scaled to
/// [0, 1) against the probability, so corpora are identical across standard
/// libraries.
///
/// Per transaction: each pattern is included with its probability (in
/// declaration order), a target size is drawn uniformly from
/// [basket_min, basket_max], and distinct uniform universe items are added
/// until the basket reaches that size.
TransactionDb generate_db(const GeneratorConfig& config);

/// FNV-1a 64 over the basket serialization; used for golden corpus checks.
std::uint64_t basket_checksum(const TransactionDb& db);

}  // namespace basket
