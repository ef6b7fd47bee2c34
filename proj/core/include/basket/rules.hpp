#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "basket/fraction.hpp"
#include "basket/item_set.hpp"
#include "basket/mining_params.hpp"
#include "basket/transaction_db.hpp"

namespace basket {

/// antecedent -> consequent, disjoint and both non-empty.
struct AssociationRule {
  ItemSet antecedent;
  ItemSet consequent;
  Count union_count = 0;
  Count antecedent_count = 0;
  /// union_count / N
  Fraction support;
  /// union_count / antecedent_count
  Fraction confidence;

  friend bool operator==(const AssociationRule&, const AssociationRule&) = default;
};

struct RuleSet {
  /// Descending confidence, descending support, then antecedent and
  /// consequent ids lexicographically.
  std::vector<AssociationRule> rules;
  MiningParams params;
  std::size_t n_transactions = 0;
};

struct RuleOptions {
  /// Largest antecedent to emit; unset means every proper subset.
  std::optional<std::size_t> max_antecedent;
};

/// n(X u Y) / N. DomainError unless 0 < union_count <= N.
Fraction rule_support(Count union_count, Count n_transactions);
/// n(X u Y) / n(X). DomainError unless 0 < union_count <= antecedent_count.
Fraction rule_confidence(Count union_count, Count antecedent_count);

/// Emits X -> Z\X for every frequent Z with |Z| >= 2 and every non-empty
/// proper subset X whose confidence meets params.min_confidence. Counts come
/// from `frequents`, which must be downward closed (ContractError if a needed
/// subset is missing).
RuleSet generate_rules(std::span<const FrequentItemset> frequents, std::size_t n_transactions,
                       const MiningParams& params, const RuleOptions& options = {});

inline RuleSet generate_rules(std::span<const FrequentItemset> frequents, const TransactionDb& db,
                              const MiningParams& params, const RuleOptions& options = {}) {
  return generate_rules(frequents, db.size(), params, options);
}

bool rule_order_less(const AssociationRule& a, const AssociationRule& b);

}  // namespace basket
