#include "basket/oracle.hpp"

#include <bit>
#include <chrono>

#include "basket/errors.hpp"

namespace basket {

std::vector<FrequentItemset> brute_force_mine(const TransactionDb& db, const MiningParams& params,
                                              PhaseStats* stats) {
  using Clock = std::chrono::steady_clock;
  const Count threshold = params.support_threshold(db.size());
  const std::size_t universe = db.universe_size();
  if (universe > kOracleMaxItems)
    throw GuardError("brute-force oracle supports at most " + std::to_string(kOracleMaxItems) +
                     " distinct items, input has " + std::to_string(universe) +
                     "; use the apriori or fpgrowth engine");
  const std::size_t max_size = params.max_itemset_size.value_or(universe);

  const auto t0 = Clock::now();
  std::vector<std::uint32_t> masks;
  masks.reserve(db.size());
  for (const ItemSet& t : db.transactions()) {
    std::uint32_t m = 0;
    for (ItemId id : t) m |= std::uint32_t{1} << id;
    masks.push_back(m);
  }
  const auto t1 = Clock::now();

  std::vector<FrequentItemset> out;
  const std::uint32_t limit = std::uint32_t{1} << universe;
  for (std::uint32_t candidate = 1; candidate < limit; ++candidate) {
    if (static_cast<std::size_t>(std::popcount(candidate)) > max_size) continue;
    Count n = 0;
    for (std::uint32_t m : masks) n += (m & candidate) == candidate ? 1 : 0;
    if (n < threshold) continue;
    std::vector<ItemId> ids;
    for (ItemId id = 0; id < universe; ++id)
      if (candidate & (std::uint32_t{1} << id)) ids.push_back(id);
    out.push_back({ItemSet::from_sorted(std::move(ids)), n});
  }
  sort_canonical(out);
  if (stats) *stats = PhaseStats{t1 - t0, Clock::now() - t1, limit - 1};
  return out;
}

}  // namespace basket
