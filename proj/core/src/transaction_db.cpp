#include "basket/transaction_db.hpp"

#include <ostream>

#include "basket/errors.hpp"

namespace basket {

TransactionDb::TransactionDb(std::vector<ItemSet> transactions, ItemDictionary dictionary)
    : transactions_(std::move(transactions)), dictionary_(std::move(dictionary)) {
  if (transactions_.empty()) throw EmptyInputError("no transactions");
  for (std::size_t i = 0; i < transactions_.size(); ++i) {
    const ItemSet& t = transactions_[i];
    if (t.empty()) throw ContractError("transaction " + std::to_string(i + 1) + " is empty");
    if (!dictionary_.contains(t.back()))
      throw ContractError("transaction " + std::to_string(i + 1) + " references an unknown item");
  }
}

Count TransactionDb::support_count(const ItemSet& items) const {
  if (!items.empty() && !dictionary_.contains(items.back()))
    throw DomainError("unknown item id " + std::to_string(items.back()));
  Count n = 0;
  for (const ItemSet& t : transactions_) n += items.is_subset_of(t) ? 1 : 0;
  return n;
}

ItemSet TransactionDb::itemset_of(std::span<const std::string_view> labels) const {
  std::vector<ItemId> ids;
  ids.reserve(labels.size());
  for (std::string_view label : labels) {
    auto id = dictionary_.find(label);
    if (!id) throw DomainError("unknown item '" + std::string(label) + "'");
    ids.push_back(*id);
  }
  return ItemSet(std::move(ids));
}

ItemSet TransactionDb::itemset_of(std::initializer_list<std::string_view> labels) const {
  return itemset_of(std::span<const std::string_view>(labels.begin(), labels.size()));
}

std::vector<std::string> TransactionDb::labels_of(const ItemSet& items) const {
  std::vector<std::string> out;
  out.reserve(items.size());
  for (ItemId id : items) out.push_back(dictionary_.label(id));
  return out;
}

void TransactionDb::write_basket(std::ostream& out) const {
  for (const ItemSet& t : transactions_) {
    bool first = true;
    for (ItemId id : t) {
      if (!first) out << ", ";
      out << dictionary_.label(id);
      first = false;
    }
    out << '\n';
  }
}

TransactionDb TransactionDbBuilder::finish() && {
  return TransactionDb(std::move(transactions_), std::move(dictionary_));
}

}  // namespace basket
