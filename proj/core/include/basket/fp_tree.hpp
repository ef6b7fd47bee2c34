#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <unordered_map>
#include <vector>

#include "basket/item_set.hpp"
#include "basket/transaction_db.hpp"

namespace basket {

using NodeIndex = std::uint32_t;
inline constexpr NodeIndex kNoNode = std::numeric_limits<NodeIndex>::max();
inline constexpr ItemId kRootItem = std::numeric_limits<ItemId>::max();

struct FpNode {
  ItemId item = kRootItem;
  Count count = 0;
  NodeIndex parent = kNoNode;
  /// Next node carrying the same item (header chain).
  NodeIndex next_same_item = kNoNode;
  std::vector<NodeIndex> children;
};

struct HeaderEntry {
  ItemId item = 0;
  Count total = 0;
  NodeIndex head = kNoNode;
};

/// A weighted item path; used for conditional pattern bases.
struct WeightedPath {
  std::vector<ItemId> items;
  Count weight = 0;
};

/// Prefix tree over frequency-ordered transactions.
///
/// Nodes live in one arena; node 0 is the item-less root whose count is the
/// total transaction weight. The header lists the frequent items by
/// descending total count, ties by ascending id, each with the head of its
/// node chain.
class FpTree {
 public:
  /// Drops items below `threshold`, then inserts each transaction's frequent
  /// items in header order. Threshold must be >= 1.
  static FpTree build(const TransactionDb& db, Count threshold);

  /// Builds a tree from weighted paths over ids in [0, universe_size).
  static FpTree from_paths(std::span<const WeightedPath> paths, Count threshold,
                           std::size_t universe_size);

  static constexpr NodeIndex root() noexcept { return 0; }
  const FpNode& node(NodeIndex index) const { return nodes_[index]; }
  std::span<const FpNode> nodes() const noexcept { return nodes_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  const std::vector<HeaderEntry>& header() const noexcept { return header_; }
  Count threshold() const noexcept { return threshold_; }
  std::size_t universe_size() const noexcept { return universe_size_; }

  /// True when no node has more than one child.
  bool is_single_path() const noexcept;

  /// Prefix paths (root side first, excluding the root) above every node of
  /// `entry`'s chain, weighted by that node's count.
  std::vector<WeightedPath> conditional_pattern_base(const HeaderEntry& entry) const;

 private:
  FpTree(Count threshold, std::size_t universe_size);

  void rank_items(std::span<const Count> item_counts);
  void insert(std::span<const ItemId> ordered_items, Count weight);
  void order_by_rank(std::vector<ItemId>& items) const;

  std::vector<FpNode> nodes_;
  std::vector<HeaderEntry> header_;
  std::vector<NodeIndex> chain_tail_;
  // item -> header position, or kUnranked
  std::vector<std::uint32_t> rank_;
  Count threshold_;
  std::size_t universe_size_;
};

inline FpTree build_fp_tree(const TransactionDb& db, Count threshold) {
  return FpTree::build(db, threshold);
}

}  // namespace basket
