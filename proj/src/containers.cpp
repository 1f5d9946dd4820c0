#include "trigrid/containers.hpp"

#include <algorithm>

namespace trigrid {

std::string reconstruct(const std::string& head, const TripletId& owner,
                        const IndexConfig& config) {
  std::string key;
  key.reserve(head.size() + 3);
  key = head;
  key += config.symbol(owner.c1);
  key += config.symbol(owner.c2);
  key += config.symbol(owner.c3);
  return key;
}

Container::Container(ContainerVariant variant) : variant_(variant) {}

std::size_t Container::size() const {
  return variant_ == ContainerVariant::list ? list_.size() : tree_.size();
}

InsertResult Container::insert(const StoredKey& entry) {
  if (variant_ == ContainerVariant::list) {
    auto it = std::lower_bound(list_.begin(), list_.end(), entry);
    if (it != list_.end() && *it == entry) return InsertResult::duplicate;
    list_.insert(it, entry);
    return InsertResult::inserted;
  }
  return tree_.insert(entry).second ? InsertResult::inserted : InsertResult::duplicate;
}

RemoveResult Container::remove(const StoredKey& entry) {
  if (variant_ == ContainerVariant::list) {
    auto it = std::lower_bound(list_.begin(), list_.end(), entry);
    if (it == list_.end() || *it != entry) return RemoveResult::absent;
    list_.erase(it);
    return RemoveResult::removed;
  }
  return tree_.erase(entry) > 0 ? RemoveResult::removed : RemoveResult::absent;
}

bool Container::contains_head(const std::string& head) const {
  StoredKey probe{head, std::string()};
  if (variant_ == ContainerVariant::list) {
    auto it = std::lower_bound(list_.begin(), list_.end(), probe);
    return it != list_.end() && it->head == head;
  }
  auto it = tree_.lower_bound(probe);
  return it != tree_.end() && it->head == head;
}

bool Container::contains(const StoredKey& entry) const {
  if (variant_ == ContainerVariant::list)
    return std::binary_search(list_.begin(), list_.end(), entry);
  return tree_.count(entry) > 0;
}

namespace {

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         std::string_view(s).substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::vector<StoredKey> Container::filter_suffix(std::string_view required_head_suffix) const {
  std::vector<StoredKey> out;
  auto collect = [&](const StoredKey& entry) {
    if (ends_with(entry.head, required_head_suffix)) out.push_back(entry);
  };
  if (variant_ == ContainerVariant::list) {
    for (const StoredKey& entry : list_) collect(entry);
  } else {
    for (const StoredKey& entry : tree_) collect(entry);
  }
  return out;
}

std::vector<StoredKey> Container::snapshot() const {
  if (variant_ == ContainerVariant::list) return list_;
  return std::vector<StoredKey>(tree_.begin(), tree_.end());
}

std::uint64_t Container::character_bytes() const {
  std::uint64_t total = 0;
  auto add = [&](const StoredKey& entry) { total += entry.head.size() + entry.payload.size(); };
  if (variant_ == ContainerVariant::list) {
    for (const StoredKey& entry : list_) add(entry);
  } else {
    for (const StoredKey& entry : tree_) add(entry);
  }
  return total;
}

void ShortKeyStore::check_length(const std::string& key) {
  if (key.size() != 1 && key.size() != 2)
    throw std::invalid_argument("short key must have length 1 or 2");
}

InsertResult ShortKeyStore::insert(const std::string& key, const std::string& payload) {
  check_length(key);
  return entries_.insert(StoredKey{key, payload}).second ? InsertResult::inserted
                                                         : InsertResult::duplicate;
}

RemoveResult ShortKeyStore::remove(const std::string& key, const std::string& payload) {
  check_length(key);
  return entries_.erase(StoredKey{key, payload}) > 0 ? RemoveResult::removed
                                                     : RemoveResult::absent;
}

bool ShortKeyStore::contains(const std::string& key) const {
  check_length(key);
  auto it = entries_.lower_bound(StoredKey{key, std::string()});
  return it != entries_.end() && it->head == key;
}

std::uint64_t ShortKeyStore::character_bytes() const {
  std::uint64_t total = 0;
  for (const StoredKey& entry : entries_) total += entry.head.size() + entry.payload.size();
  return total;
}

}  // namespace trigrid
