#include "trigrid/index.hpp"

#include <algorithm>
#include <utility>

namespace trigrid {

std::vector<TripletOccurrence> triplets_of(const std::string& key, const IndexConfig& config) {
  const std::size_t n = key.size();
  if (n < 3) throw LengthError("key shorter than one triplet");
  if (n > config.l()) throw LengthError("key longer than the configured capacity");
  std::vector<TripletOccurrence> out;
  out.reserve(n - 2);
  std::uint32_t a = config.code(key[0]);
  std::uint32_t b = config.code(key[1]);
  for (std::size_t i = 2; i < n; ++i) {
    std::uint32_t c = config.code(key[i]);
    out.push_back({TripletId{a, b, c}, static_cast<std::uint32_t>(i) - 1});
    a = b;
    b = c;
  }
  return out;
}

TripletIndex::TripletIndex(IndexConfig config, ContainerVariant variant)
    : config_(std::move(config)), variant_(variant), grid_(config_), g_(config_.l() + 1, 0) {}

void TripletIndex::validate_key(const std::string& key) const {
  if (key.empty()) throw LengthError("key must not be empty");
  if (key.size() > config_.l()) throw LengthError("key longer than the configured capacity");
  for (char c : key) config_.code(c);
}

TripletId TripletIndex::last_triplet(const std::string& key) const {
  const std::size_t n = key.size();
  return TripletId{config_.code(key[n - 3]), config_.code(key[n - 2]), config_.code(key[n - 1])};
}

const Container* TripletIndex::container_at(const TripletId& t, std::uint32_t position) const {
  auto it = containers_.find(ContainerKey{triplet_code(t, config_.k()), position});
  return it == containers_.end() ? nullptr : &it->second;
}

InsertResult TripletIndex::insert(const std::string& key) {
  return insert_entry(key, std::string());
}

InsertResult TripletIndex::insert_entry(const std::string& key, const std::string& payload) {
  validate_key(key);
  const std::size_t n = key.size();
  if (n < 3) {
    InsertResult r = short_.insert(key, payload);
    if (r == InsertResult::inserted) {
      ++m_;
      d_ += n;
    }
    return r;
  }
  auto occurrences = triplets_of(key, config_);
  const TripletOccurrence& last = occurrences.back();
  ContainerKey ckey{triplet_code(last.triplet, config_.k()), last.position};
  StoredKey entry{key.substr(0, n - 3), payload};

  auto it = containers_.find(ckey);
  if (it != containers_.end() && it->second.contains(entry)) return InsertResult::duplicate;

  for (const TripletOccurrence& occ : occurrences) grid_.set_position(occ.triplet, occ.position);
  grid_.set_mark(last.triplet, last.position);
  if (it == containers_.end()) it = containers_.emplace(ckey, Container(variant_)).first;
  it->second.insert(entry);
  ++m_;
  ++g_[n];
  d_ += n;
  return InsertResult::inserted;
}

RemoveResult TripletIndex::remove(const std::string& key) {
  return remove_entry(key, std::string());
}

RemoveResult TripletIndex::remove_entry(const std::string& key, const std::string& payload) {
  validate_key(key);
  const std::size_t n = key.size();
  if (n < 3) {
    RemoveResult r = short_.remove(key, payload);
    if (r == RemoveResult::removed) {
      --m_;
      d_ -= n;
    }
    return r;
  }
  const TripletId last = last_triplet(key);
  const std::uint32_t w_last = static_cast<std::uint32_t>(n) - 2;
  auto it = containers_.find(ContainerKey{triplet_code(last, config_.k()), w_last});
  if (it == containers_.end()) return RemoveResult::absent;
  RemoveResult r = it->second.remove(StoredKey{key.substr(0, n - 3), payload});
  if (r == RemoveResult::removed) {
    if (it->second.empty()) {
      grid_.clear_mark(last, w_last);
      containers_.erase(it);
    }
    --m_;
    --g_[n];
    d_ -= n;
  }
  return r;
}

UpdateResult TripletIndex::update(const std::string& old_key, const std::string& new_key) {
  validate_key(old_key);
  validate_key(new_key);
  if (remove(old_key) == RemoveResult::absent) return UpdateResult::absent_old;
  return insert(new_key) == InsertResult::inserted ? UpdateResult::updated
                                                   : UpdateResult::duplicate_new;
}

SearchOutcome TripletIndex::search(const std::string& key, SearchStrategy strategy) const {
  validate_key(key);
  const std::size_t n = key.size();
  SearchOutcome out;
  if (n < 3) {
    out.found = short_.contains(key);
    return out;
  }
  const std::uint32_t w_last = static_cast<std::uint32_t>(n) - 2;
  const TripletId last = last_triplet(key);
  if (strategy == SearchStrategy::index_search) {
    std::uint32_t a = config_.code(key[0]);
    std::uint32_t b = config_.code(key[1]);
    for (std::uint32_t w = 1; w <= w_last; ++w) {
      std::uint32_t c = config_.code(key[w + 1]);
      if (!grid_.test_position(TripletId{a, b, c}, w)) {
        out.pruned_at = PrunePoint::triplet;
        out.pruned_triplet = w;
        return out;
      }
      a = b;
      b = c;
    }
  }
  if (!grid_.test_mark(last, w_last)) {
    out.pruned_at = PrunePoint::mark_check;
    return out;
  }
  out.containers_probed = 1;
  const Container* container = container_at(last, w_last);
  if (container != nullptr && container->contains_head(key.substr(0, n - 3))) {
    out.found = true;
  } else {
    out.pruned_at = PrunePoint::container;
  }
  return out;
}

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

SuffixOutcome TripletIndex::suffix_search(const std::string& suffix) const {
  if (suffix.empty()) throw LengthError("suffix must not be empty");
  for (char c : suffix) config_.code(c);
  const std::size_t f = suffix.size();
  SuffixOutcome out{{}, PositionVector(config_.l()), 0, false};
  std::set<SuffixHit> hits;

  if (f < 3) {
    out.scanned = true;
    for (const StoredKey& entry : short_.entries())
      if (ends_with(entry.head, suffix)) hits.insert({entry.head, entry.payload});
    for (const auto& [ckey, container] : containers_) {
      ++out.containers_probed;
      TripletId owner = triplet_from_code(ckey.triplet, config_.k());
      for (const StoredKey& entry : container.snapshot()) {
        std::string key = reconstruct(entry.head, owner, config_);
        if (ends_with(key, suffix)) hits.insert({std::move(key), entry.payload});
      }
    }
    out.hits.assign(hits.begin(), hits.end());
    return out;
  }

  if (f > config_.l()) return out;  // no stored key is long enough

  auto occurrences = triplets_of(suffix, config_);
  const TripletId last = occurrences.back().triplet;
  PositionVector v = grid_.mark_vector(last);
  for (std::uint32_t i = 1; i + 2 < f && v.any(); ++i)
    v = v & shift_toward_end(grid_.position_vector(occurrences[f - 3 - i].triplet), i);

  const std::string head_tail = suffix.substr(0, f - 3);
  for (std::uint32_t p : v.positions()) {
    ++out.containers_probed;
    const Container* container = container_at(last, p);
    if (container == nullptr) continue;
    for (const StoredKey& entry : container->filter_suffix(head_tail))
      hits.insert({reconstruct(entry.head, last, config_), entry.payload});
  }
  out.survivors = std::move(v);
  out.hits.assign(hits.begin(), hits.end());
  return out;
}

std::set<std::string> TripletIndex::suffix_keys(const std::string& suffix) const {
  std::set<std::string> keys;
  for (const SuffixHit& hit : suffix_search(suffix).hits) keys.insert(hit.key);
  return keys;
}

std::set<std::string> TripletIndex::all_keys() const {
  std::set<std::string> keys;
  for (const auto& [ckey, container] : containers_) {
    TripletId owner = triplet_from_code(ckey.triplet, config_.k());
    for (const StoredKey& entry : container.snapshot())
      keys.insert(reconstruct(entry.head, owner, config_));
  }
  for (const StoredKey& entry : short_.entries()) keys.insert(entry.head);
  return keys;
}

std::uint64_t TripletIndex::character_bytes() const {
  std::uint64_t total = short_.character_bytes();
  for (const auto& [ckey, container] : containers_) total += container.character_bytes();
  return total;
}

IndexStats TripletIndex::stats() const {
  IndexStats s;
  s.key_count = m_;
  std::uint64_t total = 0;
  for (const auto& [ckey, container] : containers_) {
    ++s.container_count;
    std::uint64_t size = container.size();
    total += size;
    s.max_container_size = std::max(s.max_container_size, size);
  }
  if (s.container_count > 0)
    s.avg_container_size = static_cast<double>(total) / static_cast<double>(s.container_count);
  return s;
}

std::uint64_t TripletIndex::length_count(std::uint32_t w) const {
  return (w >= 1 && w <= config_.l()) ? g_[w] : 0;
}

std::uint64_t TripletIndex::length_count_at_least(std::uint32_t w) const {
  if (w < 1) w = 1;
  std::uint64_t total = 0;
  for (std::uint32_t v = w; v <= config_.l(); ++v) total += g_[v];
  return total;
}

TripletIndex TripletIndex::restore(
    const IndexConfig& config, ContainerVariant variant, BitGrid grid,
    const std::vector<std::pair<ContainerKey, std::vector<StoredKey>>>& containers,
    const std::vector<StoredKey>& short_entries) {
  if (!(grid.config() == config)) throw std::invalid_argument("grid does not match the config");
  TripletIndex idx(config, variant);
  idx.grid_ = std::move(grid);

  const std::uint64_t cells = static_cast<std::uint64_t>(config.k()) * config.k() * config.k();
  for (const auto& [ckey, entries] : containers) {
    if (ckey.triplet >= cells || ckey.position < 1 || ckey.position > config.l() - 2)
      throw std::invalid_argument("container key out of range");
    if (entries.empty()) throw std::invalid_argument("container without entries");
    TripletId owner = triplet_from_code(ckey.triplet, config.k());
    if (!idx.grid_.test_mark(owner, ckey.position))
      throw std::invalid_argument("container present but mark bit clear");
    auto [it, fresh] = idx.containers_.emplace(ckey, Container(variant));
    if (!fresh) throw std::invalid_argument("duplicate container key");
    for (const StoredKey& entry : entries) {
      if (entry.head.size() != ckey.position - 1)
        throw std::invalid_argument("head length does not match container position");
      for (char c : entry.head) {
        if (!config.has_symbol(c)) throw std::invalid_argument("head character outside alphabet");
      }
      if (it->second.insert(entry) == InsertResult::duplicate)
        throw std::invalid_argument("duplicate container entry");
      std::uint64_t n = ckey.position + 2;
      ++idx.m_;
      ++idx.g_[n];
      idx.d_ += n;
    }
  }

  for (std::uint64_t code = 0; code < cells; ++code) {
    TripletId t = triplet_from_code(code, config.k());
    for (std::uint32_t w = 1; w <= config.l(); ++w) {
      if (idx.grid_.test_mark(t, w) && idx.containers_.find(ContainerKey{code, w}) == idx.containers_.end())
        throw std::invalid_argument("mark bit set without a container");
    }
  }

  for (const StoredKey& entry : short_entries) {
    for (char c : entry.head) {
      if (!config.has_symbol(c)) throw std::invalid_argument("short key character outside alphabet");
    }
    if (idx.short_.insert(entry.head, entry.payload) == InsertResult::duplicate)
      throw std::invalid_argument("duplicate short key entry");
    ++idx.m_;
    idx.d_ += entry.head.size();
  }
  return idx;
}

}  // namespace trigrid
