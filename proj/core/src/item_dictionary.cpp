#include "basket/item_dictionary.hpp"

#include <limits>

#include "basket/errors.hpp"

namespace basket {

std::string_view trim(std::string_view text) {
  constexpr std::string_view kSpace = " \t\r\n\v\f";
  const auto first = text.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(kSpace);
  return text.substr(first, last - first + 1);
}

ItemId ItemDictionary::intern(std::string_view label, std::size_t line) {
  const std::string_view key = trim(label);
  if (key.empty()) throw IngestError("empty item label", line);
  if (auto it = ids_.find(key); it != ids_.end()) return it->second;
  if (labels_.size() >= std::numeric_limits<ItemId>::max())
    throw IngestError("too many distinct items", line);
  const auto id = static_cast<ItemId>(labels_.size());
  labels_.emplace_back(key);
  ids_.emplace(labels_.back(), id);
  return id;
}

std::optional<ItemId> ItemDictionary::find(std::string_view label) const {
  if (auto it = ids_.find(trim(label)); it != ids_.end()) return it->second;
  return std::nullopt;
}

const std::string& ItemDictionary::label(ItemId id) const {
  if (!contains(id)) throw DomainError("unknown item id " + std::to_string(id));
  return labels_[id];
}

}  // namespace basket
