#pragma once

#include <string_view>
#include <vector>

#include "basket/mining_params.hpp"
#include "basket/phase_stats.hpp"
#include "basket/transaction_db.hpp"

namespace basket {

enum class Algorithm { apriori, fpgrowth, bruteforce };

/// Accepts "apriori", "fpgrowth" and "bruteforce"; ConfigError otherwise.
Algorithm parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm algorithm);

/// Runs the selected engine. All engines return identical results.
std::vector<FrequentItemset> mine(const TransactionDb& db, const MiningParams& params,
                                  Algorithm algorithm, PhaseStats* stats = nullptr);

}  // namespace basket
