// Reverse and shifted reverse structures layered over the forward index.
// The reverse structure answers prefix queries as suffix queries on reversed
// keys; the i-shifted structures (one per shift distance 1..l-1) index every
// key's suffixes so substring queries resolve to prefix searches at the
// candidate start positions.
#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "trigrid/index.hpp"

namespace trigrid {

// A triplet index over reversed keys.  Callers speak un-reversed: insert and
// lookup reverse internally, and prefix hits are mapped back to their
// originals (the payload when one is stored, the un-reversed key otherwise).
class ReverseIndex {
 public:
  explicit ReverseIndex(const IndexConfig& config,
                        ContainerVariant variant = ContainerVariant::list);

  InsertResult insert(const std::string& key, const std::string& payload = std::string());
  RemoveResult remove(const std::string& key, const std::string& payload = std::string());
  bool contains(const std::string& key) const;

  // Originals having the prefix: a suffix search in the reversed space.
  std::set<std::string> with_prefix(const std::string& prefix) const;

  const TripletIndex& inner() const { return inner_; }

  // Wraps an index that already holds reversed keys (deserialization).
  static ReverseIndex adopt(TripletIndex inner);

 private:
  TripletIndex inner_;
};

struct SubstringOutcome {
  std::set<std::string> keys;
  PositionVector candidates;  // surviving start positions, first-triplet frame
  // Structure consulted per issued prefix search, in probe order: 0 is the
  // reverse structure, i >= 1 the i-shifted one.
  std::vector<std::uint32_t> searched_structures;
  bool scanned = false;  // fragment shorter than 3 fell back to a key scan
};

// Forward index plus the l reverse structures, kept mutually consistent: a
// key of length n is stored in the base, its reversal in the reverse
// structure, and for each shift i in 1..n-1 the suffix key[i+1..n] in the
// i-shifted structure with the whole key as payload.
// Concurrency: as the index, family-wide; a mutation owns every structure
// for its duration.
class ShiftedFamily {
 public:
  explicit ShiftedFamily(const IndexConfig& config,
                         ContainerVariant variant = ContainerVariant::list);

  const IndexConfig& config() const { return config_; }
  ContainerVariant variant() const { return variant_; }

  InsertResult insert(const std::string& key);
  RemoveResult remove(const std::string& key);

  // Exactly the indexed keys having the prefix.
  std::set<std::string> prefix_search(const std::string& prefix) const;

  // Candidate start positions of the fragment across all indexed keys: the
  // last triplet's base position vector, start-shifted by one and AND-ed
  // with each earlier triplet's vector in turn.  Never misses a true start;
  // may overapproximate.  Requires a fragment of at least one triplet.
  PositionVector substring_positions(const std::string& fragment) const;

  // Exactly the indexed keys containing the fragment: one prefix search per
  // candidate start position (position p on the (p-1)-shifted structure),
  // results unioned and deduplicated.
  SubstringOutcome substring_search(const std::string& fragment) const;

  std::uint64_t key_count() const { return base_.key_count(); }

  const TripletIndex& base() const { return base_; }
  const ReverseIndex& reverse_structure() const { return rev_; }
  std::uint32_t shifted_count() const { return static_cast<std::uint32_t>(shifted_.size()); }
  const ReverseIndex& shifted(std::uint32_t i) const;  // i in 1..shifted_count()

  // Reassembles a family from already-restored structures (deserialization).
  // All structures must share the base's config and variant; reverse must
  // hold exactly as many keys as the base and each i-shifted structure
  // exactly the base's count of keys longer than i.  Throws
  // std::invalid_argument otherwise.
  static ShiftedFamily restore(TripletIndex base, TripletIndex reverse,
                               std::vector<TripletIndex> shifted);

 private:
  IndexConfig config_;
  ContainerVariant variant_;
  TripletIndex base_;
  ReverseIndex rev_;
  std::vector<ReverseIndex> shifted_;  // index i-1 holds the i-shifted structure
};

// Bits addressed by the l reverse structures together: 2*k^3*l^2 (the base
// grid's own 2*k^3*l is reported separately).
std::uint64_t family_footprint_bits(const IndexConfig& config);

}  // namespace trigrid
