// Forward triplet index: decomposition of keys into sliding-window triplets,
// insertion, exact search under two strategies, suffix search, deletion, and
// update.  A container exists at (triplet, position) exactly while the mark
// bit there is set; position bits accumulate and deletion never clears them.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "trigrid/bitgrid.hpp"
#include "trigrid/containers.hpp"

namespace trigrid {

enum class SearchStrategy { index_search, direct_search };

// Where an unsuccessful search stopped: a position-bit miss at some triplet
// ordinal, a clear mark bit, or a container probe that rejected the head.
enum class PrunePoint { none, triplet, mark_check, container };

struct SearchOutcome {
  bool found = false;
  PrunePoint pruned_at = PrunePoint::none;
  std::uint32_t pruned_triplet = 0;  // 1-based ordinal; meaningful iff pruned_at == triplet
  std::uint64_t containers_probed = 0;
};

enum class UpdateResult { updated, absent_old, duplicate_new };

// One suffix-search hit: the stored key, plus its payload when the structure
// carries one (shifted reverse structures keep the originating key there).
struct SuffixHit {
  std::string key;
  std::string payload;

  auto operator<=>(const SuffixHit&) const = default;
};

struct SuffixOutcome {
  std::vector<SuffixHit> hits;   // deduplicated, in (key, payload) order
  PositionVector survivors;      // candidate endings, in the last triplet's frame
  std::uint64_t containers_probed = 0;
  bool scanned = false;          // fragment shorter than 3 fell back to a full scan
};

struct IndexStats {
  std::uint64_t key_count = 0;  // m, shortstore included
  std::uint64_t container_count = 0;
  std::uint64_t max_container_size = 0;
  double avg_container_size = 0.0;
};

// Container map key: flat triplet cell index plus ending position.
struct ContainerKey {
  std::uint64_t triplet = 0;
  std::uint32_t position = 0;

  auto operator<=>(const ContainerKey&) const = default;
};

// A triplet of the key together with the 1-based position of its first
// character.
struct TripletOccurrence {
  TripletId triplet;
  std::uint32_t position = 0;

  bool operator==(const TripletOccurrence&) const = default;
};

// The n-2 unit-shift window triplets of a key of length n, in order.
// Requires 3 <= n <= l; throws LengthError or EncodingError otherwise.
std::vector<TripletOccurrence> triplets_of(const std::string& key, const IndexConfig& config);

// Concurrency: any number of concurrent readers or one writer.  Queries never
// mutate, and the index may be handed between threads.
class TripletIndex {
 public:
  explicit TripletIndex(IndexConfig config, ContainerVariant variant = ContainerVariant::list);

  const IndexConfig& config() const { return config_; }
  ContainerVariant variant() const { return variant_; }

  // Set semantics: duplicates and absences are reported, never errors.
  // Keys of length 1 or 2 live in the shortstore and set no bits.
  InsertResult insert(const std::string& key);
  RemoveResult remove(const std::string& key);
  // delete(old) then insert(new); an absent old key reports and skips the insert.
  UpdateResult update(const std::string& old_key, const std::string& new_key);

  // Entry-level mutation for structures that attach a payload to each key;
  // insert(k) == insert_entry(k, "").  Entries are unique as (key, payload)
  // pairs, so one fragment may be stored once per originating key.
  InsertResult insert_entry(const std::string& key, const std::string& payload);
  RemoveResult remove_entry(const std::string& key, const std::string& payload);

  // index_search tests every position bit in order before the mark bit and
  // container; direct_search tests only the final mark bit.  The two agree
  // on found for every key and there are no false negatives.
  SearchOutcome search(const std::string& key, SearchStrategy strategy) const;

  // Every indexed key ending with the suffix.  Candidate endings are pruned
  // by AND-ing end-shifted position vectors onto the last triplet's mark
  // vector; surviving containers are filtered to discharge false positives.
  // Fragments of length 1 or 2 are answered by a full scan (shortstore plus
  // every container); fragments longer than l match nothing.
  SuffixOutcome suffix_search(const std::string& suffix) const;
  std::set<std::string> suffix_keys(const std::string& suffix) const;

  IndexStats stats() const;

  // Every indexed key, reconstructed from the containers plus the shortstore.
  std::set<std::string> all_keys() const;
  // Characters held in containers and shortstore, for memory accounting.
  std::uint64_t character_bytes() const;

  std::uint64_t key_count() const { return m_; }                // m
  std::uint64_t length_count(std::uint32_t w) const;            // g(w)
  std::uint64_t length_count_at_least(std::uint32_t w) const;   // f(w)
  std::uint64_t total_characters() const { return d_; }         // d

  const BitGrid& grid() const { return grid_; }
  const ShortKeyStore& shortstore() const { return short_; }
  const std::map<ContainerKey, Container>& containers() const { return containers_; }
  const Container* container_at(const TripletId& t, std::uint32_t position) const;

  // Rebuilds an index from stored parts (deserialization): the grid planes
  // are adopted as-is, histograms are recomputed from the containers, and
  // the mark-bit / non-empty-container correspondence is validated.  Throws
  // std::invalid_argument on any inconsistency.
  static TripletIndex restore(
      const IndexConfig& config, ContainerVariant variant, BitGrid grid,
      const std::vector<std::pair<ContainerKey, std::vector<StoredKey>>>& containers,
      const std::vector<StoredKey>& short_entries);

 private:
  // Length and alphabet checks shared by every keyed operation.
  void validate_key(const std::string& key) const;
  TripletId last_triplet(const std::string& key) const;

  IndexConfig config_;
  ContainerVariant variant_;
  BitGrid grid_;
  std::map<ContainerKey, Container> containers_;
  ShortKeyStore short_;
  std::uint64_t m_ = 0;
  std::uint64_t d_ = 0;
  std::vector<std::uint64_t> g_;  // g_[w] for w = 1..l; zero below 3
};

}  // namespace trigrid
