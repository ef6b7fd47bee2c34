#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace basket {

using ItemId = std::uint32_t;
using Count = std::uint64_t;

/// Canonical set of item ids: strictly ascending, duplicate free.
class ItemSet {
 public:
  using const_iterator = std::vector<ItemId>::const_iterator;

  ItemSet() = default;
  ItemSet(std::initializer_list<ItemId> ids);
  /// Sorts and removes duplicates.
  explicit ItemSet(std::vector<ItemId> ids);

  /// Adopts `ids` without sorting; they must already be strictly ascending.
  static ItemSet from_sorted(std::vector<ItemId> ids);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  const_iterator begin() const noexcept { return ids_.begin(); }
  const_iterator end() const noexcept { return ids_.end(); }
  ItemId operator[](std::size_t i) const { return ids_[i]; }
  ItemId back() const { return ids_.back(); }
  std::span<const ItemId> ids() const noexcept { return ids_; }

  bool contains(ItemId id) const;
  bool is_subset_of(const ItemSet& other) const;
  bool intersects(const ItemSet& other) const;

  ItemSet with(ItemId id) const;
  ItemSet union_with(const ItemSet& other) const;
  ItemSet minus(const ItemSet& other) const;

  friend bool operator==(const ItemSet&, const ItemSet&) = default;
  /// Plain lexicographic order on the id sequence.
  friend auto operator<=>(const ItemSet&, const ItemSet&) = default;

 private:
  std::vector<ItemId> ids_;
};

/// Output order shared by every engine: by size, then lexicographic ids.
bool canonical_less(const ItemSet& a, const ItemSet& b);

struct FrequentItemset {
  ItemSet itemset;
  Count count = 0;

  friend bool operator==(const FrequentItemset&, const FrequentItemset&) = default;
};

void sort_canonical(std::vector<FrequentItemset>& itemsets);

/// FNV-1a over an id sequence; ItemSetHash agrees with it.
std::size_t hash_ids(std::span<const ItemId> ids) noexcept;

struct ItemSetHash {
  std::size_t operator()(const ItemSet& set) const noexcept;
};

}  // namespace basket

template <>
struct std::hash<basket::ItemSet> : basket::ItemSetHash {};
