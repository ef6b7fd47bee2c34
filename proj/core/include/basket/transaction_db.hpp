#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "basket/item_dictionary.hpp"
#include "basket/item_set.hpp"

namespace basket {

/// Immutable corpus of transactions over an item dictionary.
///
/// Every transaction is a non-empty ItemSet whose ids are registered in the
/// dictionary, and there is at least one transaction. Safe for concurrent
/// reads once constructed.
class TransactionDb {
 public:
  /// Throws EmptyInputError for zero transactions and ContractError for an
  /// empty transaction or an id the dictionary does not know.
  TransactionDb(std::vector<ItemSet> transactions, ItemDictionary dictionary);

  /// Transaction count (the N of every support fraction).
  std::size_t size() const noexcept { return transactions_.size(); }
  const std::vector<ItemSet>& transactions() const noexcept { return transactions_; }
  const ItemDictionary& dictionary() const noexcept { return dictionary_; }
  std::size_t universe_size() const noexcept { return dictionary_.size(); }

  /// Number of transactions containing every item of `items`. Throws
  /// DomainError for ids outside the dictionary.
  Count support_count(const ItemSet& items) const;

  /// Looks labels up in the dictionary; throws DomainError for unknown ones.
  ItemSet itemset_of(std::span<const std::string_view> labels) const;
  ItemSet itemset_of(std::initializer_list<std::string_view> labels) const;
  std::vector<std::string> labels_of(const ItemSet& items) const;

  /// Writes the basket format: one line per transaction, labels joined by
  /// ", " in id order.
  void write_basket(std::ostream& out) const;

  friend bool operator==(const TransactionDb&, const TransactionDb&) = default;

 private:
  std::vector<ItemSet> transactions_;
  ItemDictionary dictionary_;
};

/// Accumulates label lists into a TransactionDb, interning as it goes.
class TransactionDbBuilder {
 public:
  template <typename Labels>
  void add(const Labels& labels, std::size_t line = 0) {
    std::vector<ItemId> ids;
    ids.reserve(std::size(labels));
    for (const auto& label : labels) ids.push_back(dictionary_.intern(label, line));
    transactions_.emplace_back(std::move(ids));
  }

  std::size_t size() const noexcept { return transactions_.size(); }
  TransactionDb finish() &&;

 private:
  std::vector<ItemSet> transactions_;
  ItemDictionary dictionary_;
};

}  // namespace basket
