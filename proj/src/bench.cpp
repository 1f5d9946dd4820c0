#include "trigrid/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace trigrid {

namespace {

using Clock = std::chrono::steady_clock;

double median_ms(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  const std::size_t n = samples.size();
  return n % 2 ? samples[n / 2] : (samples[n / 2 - 1] + samples[n / 2]) / 2.0;
}

// Wall time of one call, in milliseconds.
double timed_ms(const std::function<void()>& body) {
  const auto begin = Clock::now();
  body();
  const auto end = Clock::now();
  return std::chrono::duration<double, std::milli>(end - begin).count();
}

double timed_median_ms(std::uint32_t repeats, const std::function<void()>& body) {
  std::vector<double> samples;
  samples.reserve(repeats);
  for (std::uint32_t i = 0; i < repeats; ++i) samples.push_back(timed_ms(body));
  return median_ms(std::move(samples));
}

}  // namespace

PruningCounts count_pruning(const TripletIndex& index,
                            const std::vector<std::string>& queries,
                            SearchStrategy strategy) {
  PruningCounts counts;
  counts.queries = queries.size();
  for (const std::string& query : queries) {
    const SearchOutcome outcome = index.search(query, strategy);
    if (outcome.pruned_at == PrunePoint::triplet ||
        outcome.pruned_at == PrunePoint::mark_check) {
      ++counts.pruned;
    }
    if (outcome.containers_probed > 0) ++counts.probed;
  }
  return counts;
}

namespace {

// Measurement core shared by every entry point; the caller fills the echo
// fields that describe where the keys came from.
MetricsReport measure_point(const Workload& workload,
                            const IndexConfig& index_config,
                            const BenchConfig& config) {
  const std::uint32_t repeats = std::max<std::uint32_t>(config.repeats, 1);

  MetricsReport report;
  report.k = index_config.k();
  report.l = index_config.l();
  report.seed = config.gen.seed;
  report.variant = config.variant == ContainerVariant::list ? "list" : "tree";
  report.family = config.family;
  report.strategy =
      config.strategy == SearchStrategy::index_search ? "index" : "direct";
  report.successful_count = workload.successful_queries.size();
  report.unsuccessful_count = workload.unsuccessful_queries.size();

  // One persistent build serves every query measurement; fresh builds are
  // timed separately below.
  TripletIndex index(index_config, config.variant);
  ShiftedFamily family(index_config, config.variant);
  if (config.family) {
    for (const std::string& key : workload.insert_keys) family.insert(key);
  } else {
    for (const std::string& key : workload.insert_keys) index.insert(key);
  }
  const TripletIndex& base = config.family ? family.base() : index;

  report.index_bits = footprint_bits(index_config);
  report.family_bits = config.family ? family_footprint_bits(index_config) : 0;
  report.container_bytes = base.character_bytes();
  if (config.family) {
    report.container_bytes += family.reverse_structure().inner().character_bytes();
    for (std::uint32_t i = 1; i <= family.shifted_count(); ++i) {
      report.container_bytes += family.shifted(i).inner().character_bytes();
    }
  }
  report.total_bytes =
      (report.index_bits + report.family_bits + 7) / 8 + report.container_bytes;

  report.insert_ms = timed_median_ms(repeats, [&] {
    if (config.family) {
      ShiftedFamily fresh(index_config, config.variant);
      for (const std::string& key : workload.insert_keys) fresh.insert(key);
    } else {
      TripletIndex fresh(index_config, config.variant);
      for (const std::string& key : workload.insert_keys) fresh.insert(key);
    }
  });

  volatile std::uint64_t sink = 0;
  const auto timed_queries = [&](const std::vector<std::string>& queries) {
    return timed_median_ms(repeats, [&] {
      std::uint64_t found = 0;
      for (const std::string& query : queries) {
        found += base.search(query, config.strategy).found ? 1 : 0;
      }
      sink = sink + found;
    });
  };
  report.successful_search_ms = timed_queries(workload.successful_queries);
  report.unsuccessful_search_ms = timed_queries(workload.unsuccessful_queries);

  const PruningCounts index_counts =
      count_pruning(base, workload.unsuccessful_queries, SearchStrategy::index_search);
  const PruningCounts direct_counts =
      count_pruning(base, workload.unsuccessful_queries, SearchStrategy::direct_search);
  if (index_counts.queries > 0) {
    const double n = static_cast<double>(index_counts.queries);
    report.false_positive_rate = static_cast<double>(index_counts.probed) / n;
    report.pruning_index = static_cast<double>(index_counts.pruned) / n;
    report.pruning_direct = static_cast<double>(direct_counts.pruned) / n;
  }

  const IndexStats stats = base.stats();
  report.key_count = stats.key_count;
  report.container_count = stats.container_count;
  report.max_container_size = stats.max_container_size;
  report.avg_container_size = stats.avg_container_size;
  return report;
}

void echo_genspec(MetricsReport& report, const GenSpec& gen) {
  report.m = gen.m;
  report.distribution =
      gen.distribution == Distribution::uniform ? "uniform" : "zipf";
  report.zipf_exponent =
      gen.distribution == Distribution::zipfian ? gen.zipf_exponent : 0.0;
}

}  // namespace

MetricsReport run_bench_point(const BenchConfig& config) {
  const std::vector<std::string> keys = generate_keys(config.gen);
  const Workload workload = build_workload(keys, config.gen.seed);
  const IndexConfig index_config(canonical_alphabet(config.gen.k), config.gen.l);
  MetricsReport report = measure_point(workload, index_config, config);
  echo_genspec(report, config.gen);
  return report;
}

MetricsReport run_bench_on_keys(const std::vector<std::string>& keys,
                                const IndexConfig& index_config,
                                const BenchConfig& config) {
  const Workload workload = build_workload(keys, config.gen.seed);
  MetricsReport report = measure_point(workload, index_config, config);
  report.m = keys.size();
  report.distribution = "file";
  return report;
}

MetricsReport run_query_length_point(const BenchConfig& config,
                                     std::uint32_t query_length) {
  if (query_length < 1 || query_length > config.gen.l) {
    throw std::invalid_argument("query length outside 1..l");
  }
  const std::vector<std::string> keys = generate_keys(config.gen);
  Workload workload = build_workload(keys, config.gen.seed);
  const IndexConfig index_config(canonical_alphabet(config.gen.k), config.gen.l);

  const std::set<std::string> inserted(workload.insert_keys.begin(),
                                       workload.insert_keys.end());
  const std::string& alphabet = index_config.alphabet();
  std::mt19937_64 rng(config.gen.seed * 0x9e3779b97f4a7c15ull + query_length);
  workload.unsuccessful_queries.clear();
  for (int attempts = 0;
       workload.unsuccessful_queries.size() < 1000 && attempts < 20000;
       ++attempts) {
    std::string probe(query_length, '\0');
    for (auto& ch : probe) ch = alphabet[rng() % alphabet.size()];
    if (inserted.count(probe)) continue;
    workload.unsuccessful_queries.push_back(std::move(probe));
  }

  MetricsReport report = measure_point(workload, index_config, config);
  echo_genspec(report, config.gen);
  report.query_length = query_length;
  return report;
}

std::string to_jsonl(const MetricsReport& r) {
  nlohmann::json record{{"m", r.m},
                        {"k", r.k},
                        {"l", r.l},
                        {"distribution", r.distribution},
                        {"zipf_exponent", r.zipf_exponent},
                        {"seed", r.seed},
                        {"variant", r.variant},
                        {"family", r.family},
                        {"strategy", r.strategy},
                        {"query_length", r.query_length},
                        {"index_bits", r.index_bits},
                        {"family_bits", r.family_bits},
                        {"container_bytes", r.container_bytes},
                        {"total_bytes", r.total_bytes},
                        {"insert_ms", r.insert_ms},
                        {"successful_search_ms", r.successful_search_ms},
                        {"unsuccessful_search_ms", r.unsuccessful_search_ms},
                        {"false_positive_rate", r.false_positive_rate},
                        {"pruning_index", r.pruning_index},
                        {"pruning_direct", r.pruning_direct},
                        {"successful_count", r.successful_count},
                        {"unsuccessful_count", r.unsuccessful_count},
                        {"key_count", r.key_count},
                        {"container_count", r.container_count},
                        {"max_container_size", r.max_container_size},
                        {"avg_container_size", r.avg_container_size}};
  return record.dump();
}

std::string table_header() {
  char line[160];
  std::snprintf(line, sizeof(line), "%8s %4s %4s %6s %12s %14s %10s %8s %8s %8s",
                "m", "k", "l", "dist", "total_bytes", "insert_ms", "search_ms",
                "fp_rate", "pr_idx", "pr_dir");
  return line;
}

std::string to_table_row(const MetricsReport& r) {
  char line[200];
  std::snprintf(line, sizeof(line),
                "%8llu %4u %4u %6s %12llu %14.3f %10.3f %8.4f %8.4f %8.4f",
                static_cast<unsigned long long>(r.m), r.k, r.l,
                r.distribution.c_str(),
                static_cast<unsigned long long>(r.total_bytes), r.insert_ms,
                r.unsuccessful_search_ms, r.false_positive_rate, r.pruning_index,
                r.pruning_direct);
  return line;
}

}  // namespace trigrid
