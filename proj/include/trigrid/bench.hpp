// Benchmark harness: runs the synthetic workload protocol against one index
// configuration and reports memory, timing, and pruning metrics as a
// machine-readable record.  Times are medians over repeated runs on a
// monotonic clock; absolute values are hardware-bound and reported only.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trigrid/datagen.hpp"
#include "trigrid/family.hpp"
#include "trigrid/index.hpp"

namespace trigrid {

struct BenchConfig {
  GenSpec gen;
  ContainerVariant variant = ContainerVariant::list;
  bool family = false;                                   // build the full family
  SearchStrategy strategy = SearchStrategy::index_search;  // timed strategy
  std::uint32_t repeats = 5;                             // >= 1, median taken
};

struct MetricsReport {
  // Point echo.
  std::uint64_t m = 0;
  std::uint32_t k = 0;
  std::uint32_t l = 0;
  std::string distribution;
  double zipf_exponent = 0.0;
  std::uint64_t seed = 0;
  std::string variant;
  bool family = false;
  std::string strategy;
  std::uint32_t query_length = 0;  // 0: the workload's natural mix

  // Memory: grid bits (reverse structures separately), stored characters,
  // and the two summed in bytes.
  std::uint64_t index_bits = 0;
  std::uint64_t family_bits = 0;
  std::uint64_t container_bytes = 0;
  std::uint64_t total_bytes = 0;

  // Medians over the configured repeats, in milliseconds.
  double insert_ms = 0.0;
  double successful_search_ms = 0.0;
  double unsuccessful_search_ms = 0.0;

  // Quality over the unsuccessful pool: container probes per query under
  // the index strategy, and the pruned fraction under each strategy.
  double false_positive_rate = 0.0;
  double pruning_index = 0.0;
  double pruning_direct = 0.0;

  std::uint64_t successful_count = 0;
  std::uint64_t unsuccessful_count = 0;

  // Container statistics of the built structure.
  std::uint64_t key_count = 0;
  std::uint64_t container_count = 0;
  std::uint64_t max_container_size = 0;
  double avg_container_size = 0.0;
};

// Queries that were pruned before any container probe versus queries that
// reached one; pruned + probed can fall short of queries (length-1 and -2
// lookups go straight to the shortstore).
struct PruningCounts {
  std::uint64_t queries = 0;
  std::uint64_t pruned = 0;
  std::uint64_t probed = 0;
};

PruningCounts count_pruning(const TripletIndex& index,
                            const std::vector<std::string>& queries,
                            SearchStrategy strategy);

// Generates keys from config.gen, splits them into the workload, builds the
// structure, and measures everything above.  Deterministic except for the
// timing fields.
MetricsReport run_bench_point(const BenchConfig& config);

// The same protocol over caller-supplied keys (a key file) instead of a
// generated corpus; config.gen contributes only the workload seed.  Keys
// must fit index_config.
MetricsReport run_bench_on_keys(const std::vector<std::string>& keys,
                                const IndexConfig& index_config,
                                const BenchConfig& config);

// One sweep point at a fixed unsuccessful-query length: the workload's
// unsuccessful pool is replaced by up to 1000 random probes of exactly
// query_length symbols, none of them inserted.  Requires 1 <= query_length
// <= config.gen.l.
MetricsReport run_query_length_point(const BenchConfig& config,
                                     std::uint32_t query_length);

// One JSON object per line for scripted sweeps; a fixed-width table row for
// reading along.  Fields appear in the declaration order above.
std::string to_jsonl(const MetricsReport& report);
std::string table_header();
std::string to_table_row(const MetricsReport& report);

}  // namespace trigrid
