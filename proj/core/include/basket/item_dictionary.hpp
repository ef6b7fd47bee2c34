#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "basket/item_set.hpp"

namespace basket {

/// Bijection between item labels and dense ids assigned in first-seen order.
/// Labels are whitespace-trimmed and compared case-sensitively.
class ItemDictionary {
 public:
  /// Returns the id for `label`, registering it with the next free id when
  /// new. `line` only feeds the error message for an empty label.
  ItemId intern(std::string_view label, std::size_t line = 0);

  std::optional<ItemId> find(std::string_view label) const;
  /// Throws DomainError for an unregistered id.
  const std::string& label(ItemId id) const;
  bool contains(ItemId id) const noexcept { return id < labels_.size(); }

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  friend bool operator==(const ItemDictionary& a, const ItemDictionary& b) {
    return a.labels_ == b.labels_;
  }

 private:
  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::vector<std::string> labels_;
  std::unordered_map<std::string, ItemId, StringHash, std::equal_to<>> ids_;
};

/// Strips ASCII whitespace from both ends.
std::string_view trim(std::string_view text);

}  // namespace basket
