#pragma once

#include <vector>

#include "basket/fp_tree.hpp"
#include "basket/mining_params.hpp"
#include "basket/phase_stats.hpp"

namespace basket {

/// Mines every frequent itemset from a tree built with the same threshold
/// (ContractError otherwise). Same result contract as apriori_mine.
std::vector<FrequentItemset> fp_growth_mine(const FpTree& tree, Count threshold,
                                            const MiningParams& params);

/// Build plus mine, with optional phase timing.
std::vector<FrequentItemset> fp_growth(const TransactionDb& db, const MiningParams& params,
                                       PhaseStats* stats = nullptr);

}  // namespace basket
