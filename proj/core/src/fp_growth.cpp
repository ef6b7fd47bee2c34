#include "basket/fp_growth.hpp"

#include <chrono>
#include <limits>

#include "basket/errors.hpp"

namespace basket {

namespace {

struct PathNode {
  ItemId item;
  Count count;
};

class Miner {
 public:
  Miner(Count threshold, std::size_t max_size) : threshold_(threshold), max_size_(max_size) {}

  void mine(const FpTree& tree) {
    if (suffix_.size() >= max_size_) return;
    if (tree.is_single_path()) {
      std::vector<PathNode> path;
      for (NodeIndex n = FpTree::root(); !tree.node(n).children.empty();) {
        n = tree.node(n).children.front();
        path.push_back({tree.node(n).item, tree.node(n).count});
      }
      chosen_.clear();
      enumerate_path(path, 0);
      return;
    }
    for (const HeaderEntry& entry : tree.header()) {
      suffix_.push_back(entry.item);
      emit(suffix_, entry.total);
      if (suffix_.size() < max_size_) {
        const auto base = tree.conditional_pattern_base(entry);
        const FpTree conditional = FpTree::from_paths(base, threshold_, tree.universe_size());
        if (!conditional.header().empty()) mine(conditional);
      }
      suffix_.pop_back();
    }
  }

  std::vector<FrequentItemset> take() && { return std::move(out_); }

 private:
  // Every non-empty subset of a single path is frequent with the count of its
  // deepest node, since counts never increase going down.
  void enumerate_path(const std::vector<PathNode>& path, std::size_t from) {
    for (std::size_t i = from; i < path.size(); ++i) {
      if (suffix_.size() + chosen_.size() + 1 > max_size_) return;
      chosen_.push_back(path[i].item);
      std::vector<ItemId> items = suffix_;
      items.insert(items.end(), chosen_.begin(), chosen_.end());
      emit(items, path[i].count);
      enumerate_path(path, i + 1);
      chosen_.pop_back();
    }
  }

  void emit(const std::vector<ItemId>& items, Count count) {
    out_.push_back({ItemSet(items), count});
  }

  Count threshold_;
  std::size_t max_size_;
  std::vector<ItemId> suffix_;
  std::vector<ItemId> chosen_;
  std::vector<FrequentItemset> out_;
};

}  // namespace

std::vector<FrequentItemset> fp_growth_mine(const FpTree& tree, Count threshold,
                                            const MiningParams& params) {
  params.validate();
  if (tree.threshold() != threshold)
    throw ContractError("fp_growth_mine: tree was built with threshold " +
                        std::to_string(tree.threshold()) + ", asked to mine at " +
                        std::to_string(threshold));
  Miner miner(threshold, params.max_itemset_size.value_or(std::numeric_limits<std::size_t>::max()));
  miner.mine(tree);
  auto result = std::move(miner).take();
  sort_canonical(result);
  return result;
}

std::vector<FrequentItemset> fp_growth(const TransactionDb& db, const MiningParams& params,
                                       PhaseStats* stats) {
  using Clock = std::chrono::steady_clock;
  const Count threshold = params.support_threshold(db.size());
  const auto t0 = Clock::now();
  const FpTree tree = FpTree::build(db, threshold);
  const auto t1 = Clock::now();
  auto result = fp_growth_mine(tree, threshold, params);
  const auto t2 = Clock::now();
  if (stats) *stats = PhaseStats{t1 - t0, t2 - t1, tree.node_count()};
  return result;
}

}  // namespace basket
