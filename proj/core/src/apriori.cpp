#include "basket/apriori.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>
#include <unordered_set>

#include "basket/errors.hpp"

namespace basket {

namespace {

using Clock = std::chrono::steady_clock;

// C(n, k), saturating at `cap`.
std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > cap) return cap;
  }
  return result;
}

// Candidates bucketed by hash so a k-subset of a transaction can be looked up
// without materializing an ItemSet.
class CandidateIndex {
 public:
  explicit CandidateIndex(const std::vector<ItemSet>& candidates) : candidates_(candidates) {
    buckets_.reserve(candidates.size());
    for (std::uint32_t i = 0; i < candidates.size(); ++i)
      buckets_[hash_ids(candidates[i].ids())].push_back(i);
  }

  const std::vector<std::uint32_t>* bucket(std::span<const ItemId> ids) const {
    auto it = buckets_.find(hash_ids(ids));
    return it == buckets_.end() ? nullptr : &it->second;
  }

  // Index of the candidate equal to `ids`, or -1.
  std::int64_t find(std::span<const ItemId> ids) const {
    if (const auto* b = bucket(ids))
      for (std::uint32_t i : *b)
        if (std::ranges::equal(candidates_[i].ids(), ids)) return i;
    return -1;
  }

 private:
  const std::vector<ItemSet>& candidates_;
  std::unordered_map<std::size_t, std::vector<std::uint32_t>> buckets_;
};

std::vector<Count> count_candidates(const TransactionDb& db, const std::vector<ItemSet>& candidates,
                                    std::size_t k) {
  std::vector<Count> counts(candidates.size(), 0);
  if (candidates.empty()) return counts;
  const CandidateIndex index(candidates);
  std::vector<std::size_t> pick(k);
  std::vector<ItemId> subset(k);

  for (const ItemSet& t : db.transactions()) {
    const std::size_t n = t.size();
    if (n < k) continue;
    if (binomial_capped(n, k, candidates.size() + 1) > candidates.size()) {
      for (std::size_t c = 0; c < candidates.size(); ++c)
        if (candidates[c].is_subset_of(t)) ++counts[c];
      continue;
    }
    // Walk the k-combinations of t in lexicographic order.
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      for (std::size_t i = 0; i < k; ++i) subset[i] = t[pick[i]];
      if (auto c = index.find(subset); c >= 0) ++counts[static_cast<std::size_t>(c)];
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return counts;
}

}  // namespace

std::vector<FrequentItemset> frequent_singletons(const TransactionDb& db, Count threshold) {
  if (threshold == 0) throw ContractError("support threshold must be at least 1");
  std::vector<Count> counts(db.universe_size(), 0);
  for (const ItemSet& t : db.transactions())
    for (ItemId id : t) ++counts[id];
  std::vector<FrequentItemset> out;
  for (ItemId id = 0; id < counts.size(); ++id)
    if (counts[id] >= threshold) out.push_back({ItemSet{id}, counts[id]});
  return out;
}

CandidateSet candidate_gen(std::span<const FrequentItemset> prev_level) {
  if (prev_level.empty()) return {};
  const std::size_t width = prev_level.front().itemset.size();
  if (width == 0) throw ContractError("candidate_gen: empty itemset in previous level");

  std::vector<ItemSet> prev;
  prev.reserve(prev_level.size());
  for (const FrequentItemset& f : prev_level) {
    if (f.itemset.size() != width)
      throw ContractError("candidate_gen: previous level mixes itemset sizes " +
                          std::to_string(width) + " and " + std::to_string(f.itemset.size()));
    prev.push_back(f.itemset);
  }
  std::sort(prev.begin(), prev.end());
  prev.erase(std::unique(prev.begin(), prev.end()), prev.end());
  const std::unordered_set<ItemSet> frequent(prev.begin(), prev.end());

  CandidateSet out{width + 1, {}};
  std::vector<ItemId> subset(width);
  for (std::size_t i = 0; i < prev.size(); ++i) {
    const auto a = prev[i].ids();
    for (std::size_t j = i + 1; j < prev.size(); ++j) {
      const auto b = prev[j].ids();
      if (!std::equal(a.begin(), a.end() - 1, b.begin())) break;  // prefixes are contiguous
      std::vector<ItemId> joined(a.begin(), a.end());
      joined.push_back(b.back());

      // The subsets dropping either of the last two ids are a and b.
      bool survives = true;
      for (std::size_t drop = 0; drop + 2 < joined.size() && survives; ++drop) {
        std::size_t w = 0;
        for (std::size_t p = 0; p < joined.size(); ++p)
          if (p != drop) subset[w++] = joined[p];
        survives = frequent.contains(ItemSet::from_sorted(subset));
      }
      if (survives) out.candidates.push_back(ItemSet::from_sorted(std::move(joined)));
    }
  }
  return out;
}

std::vector<FrequentItemset> apriori_mine(const TransactionDb& db, const MiningParams& params,
                                          PhaseStats* stats) {
  const Count threshold = params.support_threshold(db.size());
  PhaseStats local;
  local.peak_structures = db.universe_size();

  auto t0 = Clock::now();
  std::vector<FrequentItemset> level = frequent_singletons(db, threshold);
  local.mine += Clock::now() - t0;

  std::vector<FrequentItemset> result = level;
  const std::size_t max_size = params.max_itemset_size.value_or(db.universe_size());
  for (std::size_t k = 2; k <= max_size && !level.empty(); ++k) {
    t0 = Clock::now();
    CandidateSet candidates = candidate_gen(level);
    local.build += Clock::now() - t0;
    local.peak_structures = std::max(local.peak_structures, candidates.candidates.size());

    t0 = Clock::now();
    const std::vector<Count> counts = count_candidates(db, candidates.candidates, k);
    level.clear();
    for (std::size_t c = 0; c < counts.size(); ++c)
      if (counts[c] >= threshold) level.push_back({std::move(candidates.candidates[c]), counts[c]});
    result.insert(result.end(), level.begin(), level.end());
    local.mine += Clock::now() - t0;
  }

  sort_canonical(result);
  if (stats) *stats = local;
  return result;
}

}  // namespace basket
