// Synthetic corpus and workload generation: random keys with uniform or
// Zipfian character distributions, split into insertions, successful and
// unsuccessful point queries, and fragment queries cut from inserted keys.
// Everything is deterministic under a fixed seed, across platforms.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace trigrid {

enum class Distribution { uniform, zipfian };

struct GenSpec {
  std::uint64_t m = 1;        // keys to generate
  std::uint32_t k = 26;       // alphabet size, over canonical_alphabet(k)
  std::uint32_t l = 16;       // maximum key length
  Distribution distribution = Distribution::uniform;
  double zipf_exponent = 1.0; // rank exponent; must be positive for zipfian
  std::uint64_t seed = 0;
};

// The first k symbols of the canonical ordering: uppercase, lowercase,
// digits, then punctuation (never '#' or '%', which the key-file format
// reserves).  Throws std::invalid_argument outside 2..canonical_symbol_limit().
std::string canonical_alphabet(std::uint32_t k);
std::uint32_t canonical_symbol_limit();

// m keys, each with length uniform on [1, l] and characters drawn i.i.d.
// from the configured distribution over canonical_alphabet(k).
std::vector<std::string> generate_keys(const GenSpec& spec);

struct Workload {
  std::vector<std::string> insert_keys;           // two-thirds slice, order kept
  std::vector<std::string> successful_queries;    // half of the distinct inserted keys
  std::vector<std::string> unsuccessful_queries;  // final third, insert collisions dropped
  std::vector<std::string> prefix_queries;        // fragments cut from inserted keys,
  std::vector<std::string> suffix_queries;        //   one class each, random positions
  std::vector<std::string> substring_queries;     //   and lengths
};

// Splits generated keys into the benchmark protocol's pools.  The first
// floor(2n/3) keys are inserted; the rest become unsuccessful queries after
// removing (and deduplicating) anything that collides with the insert set.
// Fragment classes hold min(distinct inserts, 1000) queries each.
Workload build_workload(const std::vector<std::string>& keys, std::uint64_t seed);

}  // namespace trigrid
