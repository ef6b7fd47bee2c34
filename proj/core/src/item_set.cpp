#include "basket/item_set.hpp"

#include <algorithm>
#include <iterator>

namespace basket {

ItemSet::ItemSet(std::initializer_list<ItemId> ids) : ItemSet(std::vector<ItemId>(ids)) {}

ItemSet::ItemSet(std::vector<ItemId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

ItemSet ItemSet::from_sorted(std::vector<ItemId> ids) {
  ItemSet set;
  set.ids_ = std::move(ids);
  return set;
}

bool ItemSet::contains(ItemId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool ItemSet::is_subset_of(const ItemSet& other) const {
  if (size() > other.size()) return false;
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

bool ItemSet::intersects(const ItemSet& other) const {
  auto a = ids_.begin();
  auto b = other.ids_.begin();
  while (a != ids_.end() && b != other.ids_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

ItemSet ItemSet::with(ItemId id) const {
  std::vector<ItemId> out = ids_;
  auto pos = std::lower_bound(out.begin(), out.end(), id);
  if (pos == out.end() || *pos != id) out.insert(pos, id);
  return from_sorted(std::move(out));
}

ItemSet ItemSet::union_with(const ItemSet& other) const {
  std::vector<ItemId> out;
  out.reserve(size() + other.size());
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(out));
  return from_sorted(std::move(out));
}

ItemSet ItemSet::minus(const ItemSet& other) const {
  std::vector<ItemId> out;
  out.reserve(size());
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                      std::back_inserter(out));
  return from_sorted(std::move(out));
}

bool canonical_less(const ItemSet& a, const ItemSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void sort_canonical(std::vector<FrequentItemset>& itemsets) {
  std::sort(itemsets.begin(), itemsets.end(),
            [](const FrequentItemset& a, const FrequentItemset& b) {
              return canonical_less(a.itemset, b.itemset);
            });
}

std::size_t hash_ids(std::span<const ItemId> ids) noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (ItemId id : ids) {
    h ^= id;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::size_t ItemSetHash::operator()(const ItemSet& set) const noexcept {
  return hash_ids(set.ids());
}

}  // namespace basket
