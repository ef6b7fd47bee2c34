#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "basket/item_set.hpp"
#include "basket/mining_params.hpp"
#include "basket/phase_stats.hpp"
#include "basket/transaction_db.hpp"

namespace basket {

/// Candidate k-itemsets for one Apriori level. Every (k-1)-subset of every
/// candidate was frequent at the previous level. `k` is 0 when the previous
/// level was empty.
struct CandidateSet {
  std::size_t k = 0;
  std::vector<ItemSet> candidates;
};

/// Single items with count >= threshold, in id order. Threshold must be >= 1.
std::vector<FrequentItemset> frequent_singletons(const TransactionDb& db, Count threshold);

/// Prefix join of frequent (k-1)-itemsets on their first k-2 ids, followed by
/// the anti-monotone prune. Throws ContractError on mixed sizes.
CandidateSet candidate_gen(std::span<const FrequentItemset> prev_level);

/// Level-wise mining. Output is canonically ordered with exact counts.
/// When `stats` is given, candidate generation is timed as the build phase
/// and support counting as the mining phase.
std::vector<FrequentItemset> apriori_mine(const TransactionDb& db, const MiningParams& params,
                                          PhaseStats* stats = nullptr);

}  // namespace basket
