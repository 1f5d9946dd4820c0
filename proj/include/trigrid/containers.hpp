// Key storage attached to mark bits.  A container holds the keys sharing a
// terminal (triplet, position), truncated to their head (the key minus its
// final three characters).  Two interchangeable variants: a lexicographically
// ordered list and a balanced ordered tree.  Keys of length 1 or 2 carry no
// triplet and live in the ShortKeyStore instead.
#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "trigrid/bitgrid.hpp"

namespace trigrid {

enum class ContainerVariant { list, tree };

enum class InsertResult { inserted, duplicate };
enum class RemoveResult { removed, absent };

// One container entry.  The payload is empty for ordinary indexes, where the
// full key is reconstructed from head + owner triplet; shifted reverse
// structures store the original key in it.  Entries are unique as pairs and
// ordered lexicographically by (head, payload).
struct StoredKey {
  std::string head;
  std::string payload;

  auto operator<=>(const StoredKey&) const = default;
};

// Rebuilds the full key a head stands for: head + the owner triplet's three
// characters.  Injective per container (heads are distinct there).
std::string reconstruct(const std::string& head, const TripletId& owner, const IndexConfig& config);

class Container {
 public:
  explicit Container(ContainerVariant variant);

  ContainerVariant variant() const { return variant_; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  InsertResult insert(const StoredKey& entry);
  RemoveResult remove(const StoredKey& entry);
  // Membership by head alone (any payload); binary search on the list
  // variant, tree lookup on the tree variant.
  bool contains_head(const std::string& head) const;
  bool contains(const StoredKey& entry) const;

  // Entries whose head ends with the required suffix; an empty constraint
  // returns everything.  Used to discharge suffix-query false positives.
  std::vector<StoredKey> filter_suffix(std::string_view required_head_suffix) const;

  // All entries in (head, payload) order.
  std::vector<StoredKey> snapshot() const;

  // Total characters stored, for memory accounting.
  std::uint64_t character_bytes() const;

 private:
  ContainerVariant variant_;
  std::vector<StoredKey> list_;            // sorted; used when variant == list
  std::set<StoredKey> tree_;               // used when variant == tree
};

// Set of (key, payload) pairs for keys of length 1 or 2.  Distinct short keys
// are bounded by k + k^2; payload multiplicity is the shifted structures'.
class ShortKeyStore {
 public:
  InsertResult insert(const std::string& key, const std::string& payload = std::string());
  RemoveResult remove(const std::string& key, const std::string& payload = std::string());
  bool contains(const std::string& key) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  // Entries in (key, payload) order.
  const std::set<StoredKey>& entries() const { return entries_; }

  std::uint64_t character_bytes() const;

 private:
  static void check_length(const std::string& key);

  std::set<StoredKey> entries_;
};

}  // namespace trigrid
