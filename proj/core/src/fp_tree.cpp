#include "basket/fp_tree.hpp"

#include <algorithm>

#include "basket/errors.hpp"

namespace basket {

namespace {

constexpr std::uint32_t kUnranked = std::numeric_limits<std::uint32_t>::max();

using ChildLookup = std::unordered_map<std::uint64_t, NodeIndex>;

std::uint64_t child_key(NodeIndex parent, ItemId item) {
  return (static_cast<std::uint64_t>(parent) << 32) | item;
}

}  // namespace

FpTree::FpTree(Count threshold, std::size_t universe_size)
    : rank_(universe_size, kUnranked), threshold_(threshold), universe_size_(universe_size) {
  if (threshold == 0) throw ContractError("support threshold must be at least 1");
  nodes_.emplace_back();
}

void FpTree::rank_items(std::span<const Count> item_counts) {
  for (ItemId id = 0; id < item_counts.size(); ++id)
    if (item_counts[id] >= threshold_) header_.push_back({id, item_counts[id], kNoNode});
  std::sort(header_.begin(), header_.end(), [](const HeaderEntry& a, const HeaderEntry& b) {
    return a.total != b.total ? a.total > b.total : a.item < b.item;
  });
  for (std::uint32_t r = 0; r < header_.size(); ++r) rank_[header_[r].item] = r;
  chain_tail_.assign(header_.size(), kNoNode);
}

void FpTree::order_by_rank(std::vector<ItemId>& items) const {
  std::erase_if(items, [this](ItemId id) { return rank_[id] == kUnranked; });
  std::sort(items.begin(), items.end(),
            [this](ItemId a, ItemId b) { return rank_[a] < rank_[b]; });
}

namespace {

// Shared insertion routine; the lookup map only lives for one build.
struct Inserter {
  std::vector<FpNode>& nodes;
  std::vector<HeaderEntry>& header;
  std::vector<NodeIndex>& chain_tail;
  const std::vector<std::uint32_t>& rank;
  ChildLookup lookup;

  void insert(std::span<const ItemId> ordered, Count weight) {
    NodeIndex current = FpTree::root();
    for (ItemId item : ordered) {
      auto [it, fresh] = lookup.try_emplace(child_key(current, item), kNoNode);
      if (fresh) {
        const auto index = static_cast<NodeIndex>(nodes.size());
        nodes.push_back(FpNode{item, 0, current, kNoNode, {}});
        nodes[current].children.push_back(index);
        const std::uint32_t r = rank[item];
        if (chain_tail[r] == kNoNode)
          header[r].head = index;
        else
          nodes[chain_tail[r]].next_same_item = index;
        chain_tail[r] = index;
        it->second = index;
      }
      current = it->second;
      nodes[current].count += weight;
    }
  }
};

}  // namespace

FpTree FpTree::build(const TransactionDb& db, Count threshold) {
  FpTree tree(threshold, db.universe_size());
  std::vector<Count> counts(db.universe_size(), 0);
  for (const ItemSet& t : db.transactions())
    for (ItemId id : t) ++counts[id];
  tree.rank_items(counts);
  tree.nodes_[root()].count = db.size();

  Inserter inserter{tree.nodes_, tree.header_, tree.chain_tail_, tree.rank_, {}};
  std::vector<ItemId> ordered;
  for (const ItemSet& t : db.transactions()) {
    ordered.assign(t.begin(), t.end());
    tree.order_by_rank(ordered);
    inserter.insert(ordered, 1);
  }
  return tree;
}

FpTree FpTree::from_paths(std::span<const WeightedPath> paths, Count threshold,
                          std::size_t universe_size) {
  FpTree tree(threshold, universe_size);
  std::vector<Count> counts(universe_size, 0);
  Count total = 0;
  for (const WeightedPath& path : paths) {
    total += path.weight;
    for (ItemId id : path.items) {
      if (id >= universe_size) throw ContractError("path item outside the universe");
      counts[id] += path.weight;
    }
  }
  tree.rank_items(counts);
  tree.nodes_[root()].count = total;

  Inserter inserter{tree.nodes_, tree.header_, tree.chain_tail_, tree.rank_, {}};
  std::vector<ItemId> ordered;
  for (const WeightedPath& path : paths) {
    ordered = path.items;
    tree.order_by_rank(ordered);
    inserter.insert(ordered, path.weight);
  }
  return tree;
}

bool FpTree::is_single_path() const noexcept {
  return std::ranges::all_of(nodes_, [](const FpNode& n) { return n.children.size() <= 1; });
}

std::vector<WeightedPath> FpTree::conditional_pattern_base(const HeaderEntry& entry) const {
  std::vector<WeightedPath> base;
  for (NodeIndex n = entry.head; n != kNoNode; n = nodes_[n].next_same_item) {
    WeightedPath path{{}, nodes_[n].count};
    for (NodeIndex p = nodes_[n].parent; p != root(); p = nodes_[p].parent)
      path.items.push_back(nodes_[p].item);
    if (path.items.empty()) continue;
    std::reverse(path.items.begin(), path.items.end());
    base.push_back(std::move(path));
  }
  return base;
}

}  // namespace basket
