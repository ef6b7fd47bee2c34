#pragma once

#include <cstddef>
#include <vector>

#include "basket/mining_params.hpp"
#include "basket/phase_stats.hpp"
#include "basket/transaction_db.hpp"

namespace basket {

inline constexpr std::size_t kOracleMaxItems = 20;

/// Enumerates every non-empty subset of the item universe and counts it by a
/// straight scan. Reference result for the real engines; refuses (GuardError)
/// universes above kOracleMaxItems.
std::vector<FrequentItemset> brute_force_mine(const TransactionDb& db, const MiningParams& params,
                                              PhaseStats* stats = nullptr);

}  // namespace basket
