#include "basket/rules.hpp"

#include <algorithm>
#include <unordered_map>

#include "basket/errors.hpp"

namespace basket {

Fraction rule_support(Count union_count, Count n_transactions) {
  if (n_transactions == 0) throw DomainError("rule_support: no transactions");
  if (union_count == 0 || union_count > n_transactions)
    throw DomainError("rule_support: count " + std::to_string(union_count) + " outside (0, " +
                      std::to_string(n_transactions) + "]");
  return {union_count, n_transactions};
}

Fraction rule_confidence(Count union_count, Count antecedent_count) {
  if (antecedent_count == 0) throw DomainError("rule_confidence: antecedent never occurs");
  if (union_count == 0 || union_count > antecedent_count)
    throw DomainError("rule_confidence: count " + std::to_string(union_count) + " outside (0, " +
                      std::to_string(antecedent_count) + "]");
  return {union_count, antecedent_count};
}

bool rule_order_less(const AssociationRule& a, const AssociationRule& b) {
  if (auto c = compare_value(a.confidence, b.confidence); c != 0) return c > 0;
  if (auto c = compare_value(a.support, b.support); c != 0) return c > 0;
  if (a.antecedent != b.antecedent) return a.antecedent < b.antecedent;
  return a.consequent < b.consequent;
}

RuleSet generate_rules(std::span<const FrequentItemset> frequents, std::size_t n_transactions,
                       const MiningParams& params, const RuleOptions& options) {
  params.validate();
  const Count support_floor = params.support_threshold(n_transactions);
  std::unordered_map<ItemSet, Count> counts;
  counts.reserve(frequents.size());
  for (const FrequentItemset& f : frequents) counts.emplace(f.itemset, f.count);

  RuleSet out{{}, params, n_transactions};
  std::vector<ItemId> antecedent;
  for (const FrequentItemset& whole : frequents) {
    const std::size_t n = whole.itemset.size();
    if (n < 2 || whole.count < support_floor) continue;
    if (n >= 64) throw ContractError("generate_rules: itemset too large to split");
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
      if (options.max_antecedent && size > *options.max_antecedent) continue;
      antecedent.clear();
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::uint64_t{1} << i)) antecedent.push_back(whole.itemset[i]);
      ItemSet lhs = ItemSet::from_sorted(antecedent);
      auto it = counts.find(lhs);
      if (it == counts.end())
        throw ContractError("generate_rules: frequent itemsets are not downward closed");
      const Count lhs_count = it->second;
      if (whole.count < fraction_threshold(params.min_confidence, lhs_count)) continue;
      ItemSet rhs = whole.itemset.minus(lhs);
      out.rules.push_back({std::move(lhs), std::move(rhs), whole.count, lhs_count,
                           rule_support(whole.count, n_transactions),
                           rule_confidence(whole.count, lhs_count)});
    }
  }
  std::sort(out.rules.begin(), out.rules.end(), rule_order_less);
  return out;
}

}  // namespace basket
