#include "trigrid/family.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace trigrid {

namespace {

std::string reversed(const std::string& s) { return std::string(s.rbegin(), s.rend()); }

}  // namespace

ReverseIndex::ReverseIndex(const IndexConfig& config, ContainerVariant variant)
    : inner_(config, variant) {}

InsertResult ReverseIndex::insert(const std::string& key, const std::string& payload) {
  return inner_.insert_entry(reversed(key), payload);
}

RemoveResult ReverseIndex::remove(const std::string& key, const std::string& payload) {
  return inner_.remove_entry(reversed(key), payload);
}

bool ReverseIndex::contains(const std::string& key) const {
  return inner_.search(reversed(key), SearchStrategy::direct_search).found;
}

std::set<std::string> ReverseIndex::with_prefix(const std::string& prefix) const {
  std::set<std::string> out;
  for (const SuffixHit& hit : inner_.suffix_search(reversed(prefix)).hits)
    out.insert(hit.payload.empty() ? reversed(hit.key) : hit.payload);
  return out;
}

ReverseIndex ReverseIndex::adopt(TripletIndex inner) {
  ReverseIndex rev(inner.config(), inner.variant());
  rev.inner_ = std::move(inner);
  return rev;
}

ShiftedFamily::ShiftedFamily(const IndexConfig& config, ContainerVariant variant)
    : config_(config), variant_(variant), base_(config, variant), rev_(config, variant) {
  shifted_.reserve(config_.l() - 1);
  for (std::uint32_t i = 1; i < config_.l(); ++i) shifted_.emplace_back(config_, variant);
}

const ReverseIndex& ShiftedFamily::shifted(std::uint32_t i) const {
  if (i < 1 || i > shifted_.size()) throw std::out_of_range("shift distance out of range");
  return shifted_[i - 1];
}

InsertResult ShiftedFamily::insert(const std::string& key) {
  InsertResult result = base_.insert(key);
  if (result == InsertResult::duplicate) return result;
  rev_.insert(key);
  for (std::size_t i = 1; i < key.size(); ++i) shifted_[i - 1].insert(key.substr(i), key);
  return result;
}

RemoveResult ShiftedFamily::remove(const std::string& key) {
  RemoveResult result = base_.remove(key);
  if (result == RemoveResult::absent) return result;
  rev_.remove(key);
  for (std::size_t i = 1; i < key.size(); ++i) shifted_[i - 1].remove(key.substr(i), key);
  return result;
}

std::set<std::string> ShiftedFamily::prefix_search(const std::string& prefix) const {
  return rev_.with_prefix(prefix);
}

PositionVector ShiftedFamily::substring_positions(const std::string& fragment) const {
  for (char c : fragment) config_.code(c);
  const std::size_t r = fragment.size();
  if (r < 3) throw LengthError("fragment shorter than one triplet");
  if (r > config_.l()) return PositionVector(config_.l());
  auto occurrences = triplets_of(fragment, config_);
  PositionVector v = base_.grid().position_vector(occurrences.back().triplet);
  for (std::size_t j = occurrences.size() - 1; j-- > 0 && v.any();)
    v = shift_toward_start(v, 1) & base_.grid().position_vector(occurrences[j].triplet);
  return v;
}

SubstringOutcome ShiftedFamily::substring_search(const std::string& fragment) const {
  if (fragment.empty()) throw LengthError("fragment must not be empty");
  for (char c : fragment) config_.code(c);
  SubstringOutcome out{{}, PositionVector(config_.l()), {}, false};

  if (fragment.size() < 3) {
    out.scanned = true;
    for (const std::string& key : base_.all_keys())
      if (key.find(fragment) != std::string::npos) out.keys.insert(key);
    return out;
  }
  if (fragment.size() > config_.l()) return out;

  out.candidates = substring_positions(fragment);
  for (std::uint32_t p : out.candidates.positions()) {
    out.searched_structures.push_back(p - 1);
    std::set<std::string> hits =
        (p == 1) ? rev_.with_prefix(fragment) : shifted_[p - 2].with_prefix(fragment);
    out.keys.insert(hits.begin(), hits.end());
  }
  return out;
}

ShiftedFamily ShiftedFamily::restore(TripletIndex base, TripletIndex reverse,
                                     std::vector<TripletIndex> shifted) {
  const IndexConfig& config = base.config();
  const ContainerVariant variant = base.variant();
  if (reverse.config() != config || reverse.variant() != variant) {
    throw std::invalid_argument("reverse structure disagrees with the base");
  }
  if (shifted.size() != config.l() - 1) {
    throw std::invalid_argument("family needs one shifted structure per shift distance");
  }
  // The length histograms only see container-resident keys, so the length-2
  // shortstore keys feeding the 1-shifted structure are counted separately.
  std::uint64_t short_two = 0;
  for (const StoredKey& entry : base.shortstore().entries()) {
    if (entry.head.size() == 2) ++short_two;
  }
  for (std::size_t i = 0; i < shifted.size(); ++i) {
    if (shifted[i].config() != config || shifted[i].variant() != variant) {
      throw std::invalid_argument("shifted structure disagrees with the base");
    }
    const std::uint64_t expected =
        base.length_count_at_least(static_cast<std::uint32_t>(i) + 2) +
        (i == 0 ? short_two : 0);
    if (shifted[i].key_count() != expected) {
      throw std::invalid_argument("shifted structure entry count is inconsistent");
    }
  }
  if (reverse.key_count() != base.key_count()) {
    throw std::invalid_argument("reverse structure entry count is inconsistent");
  }
  std::set<std::string> reversed_base;
  for (const std::string& key : base.all_keys()) reversed_base.insert(reversed(key));
  if (reverse.all_keys() != reversed_base) {
    throw std::invalid_argument("reverse structure keys do not mirror the base");
  }

  ShiftedFamily family(config, variant);
  family.base_ = std::move(base);
  family.rev_ = ReverseIndex::adopt(std::move(reverse));
  family.shifted_.clear();
  family.shifted_.reserve(shifted.size());
  for (auto& structure : shifted) {
    family.shifted_.push_back(ReverseIndex::adopt(std::move(structure)));
  }
  return family;
}

std::uint64_t family_footprint_bits(const IndexConfig& config) {
  return static_cast<std::uint64_t>(config.l()) * footprint_bits(config);
}

}  // namespace trigrid
