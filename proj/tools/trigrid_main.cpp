// Command-line front end: generate corpora, build and persist indexes, run
// queries with telemetry, inspect artifacts, and execute benchmark sweeps.
#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trigrid/analysis.hpp"
#include "trigrid/bench.hpp"
#include "trigrid/datagen.hpp"
#include "trigrid/family.hpp"
#include "trigrid/index.hpp"
#include "trigrid/keyfile.hpp"
#include "trigrid/serialize.hpp"

namespace {

using namespace trigrid;

ContainerVariant parse_variant(const std::string& name) {
  return name == "tree" ? ContainerVariant::tree : ContainerVariant::list;
}

const char* strategy_name(SearchStrategy strategy) {
  return strategy == SearchStrategy::index_search ? "index" : "direct";
}

struct GenOptions {
  std::uint64_t m = 1000;
  std::uint32_t k = 26;
  std::uint32_t l = 16;
  std::string dist = "uniform";
  double zipf_exp = 1.0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenOptions& opt) {
  GenSpec spec;
  spec.m = opt.m;
  spec.k = opt.k;
  spec.l = opt.l;
  spec.distribution = opt.dist == "zipf" ? Distribution::zipfian : Distribution::uniform;
  spec.zipf_exponent = opt.zipf_exp;
  spec.seed = opt.seed;
  const std::vector<std::string> keys = generate_keys(spec);
  const std::string alphabet = canonical_alphabet(opt.k);
  if (opt.out.empty()) {
    write_key_file(std::cout, keys, alphabet);
  } else {
    write_key_file_at(opt.out, keys, alphabet);
    std::cout << "wrote " << keys.size() << " keys to " << opt.out << "\n";
  }
  return 0;
}

struct BuildOptions {
  std::string input;
  std::string out;
  std::uint32_t k = 0;  // 0: take the alphabet from the file
  std::uint32_t l = 0;
  bool auto_l = false;
  std::string variant = "list";
  bool family = false;
  bool lenient = false;
};

int run_build(const BuildOptions& opt) {
  const KeyFile file = read_key_file_at(opt.input);

  std::string alphabet;
  if (!file.alphabet.empty()) {
    if (opt.k != 0) {
      std::cerr << "error: " << opt.input << " declares an alphabet; drop --k\n";
      return 1;
    }
    alphabet = file.alphabet;
  } else if (opt.k != 0) {
    alphabet = canonical_alphabet(opt.k);
  } else {
    alphabet = file.effective_alphabet();
  }
  if (alphabet.size() < 2) {
    std::cerr << "error: cannot determine an alphabet; declare %alphabet= or pass --k\n";
    return 1;
  }

  std::uint32_t l = opt.l;
  if (opt.auto_l) {
    if (file.records.empty()) {
      std::cerr << "error: cannot size --auto-l from an empty key file; pass --l\n";
      return 1;
    }
    l = std::max<std::uint32_t>(3, file.max_key_length());
  }
  if (l == 0) {
    std::cerr << "error: pass --l or --auto-l\n";
    return 1;
  }

  const IndexConfig config(alphabet, l);

  std::vector<const KeyRecord*> valid;
  valid.reserve(file.records.size());
  std::uint64_t skipped = 0;
  for (const KeyRecord& record : file.records) {
    std::string reason;
    if (record.key.size() > config.l()) {
      reason = "length " + std::to_string(record.key.size()) +
               " exceeds l=" + std::to_string(config.l());
    } else {
      for (const char c : record.key) {
        if (!config.has_symbol(c)) {
          reason = std::string("symbol '") + c + "' not in alphabet";
          break;
        }
      }
    }
    if (reason.empty()) {
      valid.push_back(&record);
    } else if (opt.lenient) {
      ++skipped;
    } else {
      std::cerr << "error: line " << record.line << ": invalid key \""
                << record.key << "\" (" << reason << ")\n";
      return 1;
    }
  }

  std::uint64_t stored = 0;
  if (opt.family) {
    ShiftedFamily family(config, parse_variant(opt.variant));
    for (const KeyRecord* record : valid) {
      if (family.insert(record->key) == InsertResult::inserted) ++stored;
    }
    save_family_at(opt.out, family);
  } else {
    TripletIndex index(config, parse_variant(opt.variant));
    for (const KeyRecord* record : valid) {
      if (index.insert(record->key) == InsertResult::inserted) ++stored;
    }
    save_index_at(opt.out, index);
  }

  std::cout << "alphabet: " << alphabet << "\n"
            << "l: " << l << "\n"
            << "keys: " << valid.size() << " (" << stored << " stored";
  if (opt.lenient) std::cout << ", " << skipped << " skipped";
  std::cout << ")\n"
            << "artifact: " << opt.out << "\n";
  return 0;
}

struct QueryOptions {
  std::string artifact;
  std::string mode;
  std::string query;
  std::string strategy = "index";
  double cost_ts = 1.0;
  double cost_tc = 10.0;
};

int run_query(const QueryOptions& opt) {
  const LoadedArtifact artifact = load_artifact_at(opt.artifact);
  const TripletIndex& base =
      artifact.is_family ? artifact.family->base() : *artifact.index;

  if (opt.mode == "exact") {
    SearchStrategy strategy = SearchStrategy::index_search;
    if (opt.strategy == "auto") {
      // The model covers container-resident key lengths; anything else has
      // no triplet walk to save, so direct search wins by default.
      if (opt.query.size() >= 3 && opt.query.size() <= base.config().l()) {
        CostModel cost;
        cost.traversal_cost = opt.cost_ts;
        cost.container_cost = opt.cost_tc;
        cost.avg_container_cost = opt.cost_tc;
        strategy = choose_strategy(cost, profile_of(base),
                                   static_cast<std::uint32_t>(opt.query.size()))
                       .recommended;
      } else {
        strategy = SearchStrategy::direct_search;
      }
    } else if (opt.strategy == "direct") {
      strategy = SearchStrategy::direct_search;
    }
    std::cout << "strategy: " << strategy_name(strategy) << "\n";

    const SearchOutcome outcome = base.search(opt.query, strategy);
    if (outcome.found) {
      std::cout << "found\n";
    } else {
      switch (outcome.pruned_at) {
        case PrunePoint::triplet:
          std::cout << "not found (pruned at triplet " << outcome.pruned_triplet
                    << ")\n";
          break;
        case PrunePoint::mark_check:
          std::cout << "not found (pruned at mark)\n";
          break;
        case PrunePoint::container:
          std::cout << "not found (rejected by container)\n";
          break;
        case PrunePoint::none:
          std::cout << "not found\n";
          break;
      }
    }
    std::cout << "containers probed: " << outcome.containers_probed << "\n";
    return 0;
  }

  if (opt.mode == "suffix") {
    const SuffixOutcome outcome = base.suffix_search(opt.query);
    std::set<std::string> keys;
    for (const SuffixHit& hit : outcome.hits) keys.insert(hit.key);
    for (const std::string& key : keys) std::cout << key << "\n";
    std::cout << "matches: " << keys.size() << "\n"
              << "containers probed: " << outcome.containers_probed << "\n";
    if (outcome.scanned) std::cout << "scanned: full sweep\n";
    return 0;
  }

  if (!artifact.is_family) {
    std::cerr << "error: " << opt.mode
              << " search needs a family artifact (build with --family)\n";
    return 1;
  }

  if (opt.mode == "prefix") {
    const std::set<std::string> keys = artifact.family->prefix_search(opt.query);
    for (const std::string& key : keys) std::cout << key << "\n";
    std::cout << "matches: " << keys.size() << "\n";
    return 0;
  }

  const SubstringOutcome outcome = artifact.family->substring_search(opt.query);
  for (const std::string& key : outcome.keys) std::cout << key << "\n";
  std::cout << "matches: " << outcome.keys.size() << "\n"
            << "prefix searches: " << outcome.searched_structures.size() << "\n";
  if (!outcome.searched_structures.empty()) {
    std::cout << "structures consulted:";
    for (const std::uint32_t s : outcome.searched_structures) {
      if (s == 0) {
        std::cout << " reverse";
      } else {
        std::cout << " S" << s;
      }
    }
    std::cout << "\n";
  }
  if (outcome.scanned) std::cout << "scanned: full sweep\n";
  return 0;
}

struct BenchOptions {
  std::string keys_file;
  std::uint64_t m = 1000;
  std::uint32_t k = 26;
  std::uint32_t l = 0;  // 0: 16 for generated corpora, fitted for --keys
  std::string dist = "uniform";
  double zipf_exp = 1.0;
  std::uint64_t seed = 0;
  std::string variant = "list";
  bool family = false;
  std::string strategy = "index";
  std::uint32_t repeats = 5;
  std::string sweep;
  std::vector<std::uint64_t> values;
  std::string format = "jsonl";
  std::string out;
};

int run_bench(const BenchOptions& opt) {
  BenchConfig config;
  config.gen.m = opt.m;
  config.gen.k = opt.k;
  config.gen.l = opt.l == 0 ? 16 : opt.l;
  config.gen.distribution =
      opt.dist == "zipf" ? Distribution::zipfian : Distribution::uniform;
  config.gen.zipf_exponent = opt.zipf_exp;
  config.gen.seed = opt.seed;
  config.variant = parse_variant(opt.variant);
  config.family = opt.family;
  config.strategy = opt.strategy == "direct" ? SearchStrategy::direct_search
                                             : SearchStrategy::index_search;
  config.repeats = opt.repeats;

  std::vector<MetricsReport> reports;
  if (!opt.keys_file.empty()) {
    if (!opt.sweep.empty()) {
      std::cerr << "error: --sweep needs a generated corpus, not --keys\n";
      return 1;
    }
    const KeyFile file = read_key_file_at(opt.keys_file);
    if (file.records.empty()) {
      std::cerr << "error: key file is empty\n";
      return 1;
    }
    const std::string alphabet =
        file.alphabet.empty() ? file.effective_alphabet() : file.alphabet;
    const std::uint32_t l =
        opt.l != 0 ? opt.l : std::max<std::uint32_t>(3, file.max_key_length());
    for (const KeyRecord& record : file.records) {
      if (record.key.size() > l) {
        std::cerr << "error: line " << record.line << ": key longer than l="
                  << l << "\n";
        return 1;
      }
    }
    reports.push_back(
        run_bench_on_keys(file.keys(), IndexConfig(alphabet, l), config));
  } else if (opt.sweep.empty()) {
    reports.push_back(run_bench_point(config));
  } else {
    if (opt.values.empty()) {
      std::cerr << "error: --sweep needs --values\n";
      return 1;
    }
    for (const std::uint64_t value : opt.values) {
      if (opt.sweep == "qlen") {
        reports.push_back(run_query_length_point(
            config, static_cast<std::uint32_t>(value)));
        continue;
      }
      BenchConfig point = config;
      if (opt.sweep == "m") point.gen.m = value;
      if (opt.sweep == "k") point.gen.k = static_cast<std::uint32_t>(value);
      if (opt.sweep == "l") point.gen.l = static_cast<std::uint32_t>(value);
      reports.push_back(run_bench_point(point));
    }
  }

  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (!opt.out.empty()) {
    file_out.open(opt.out);
    if (!file_out) {
      std::cerr << "error: cannot open " << opt.out << " for writing\n";
      return 1;
    }
    out = &file_out;
  }
  if (opt.format == "table") {
    *out << table_header() << "\n";
    for (const MetricsReport& report : reports) *out << to_table_row(report) << "\n";
  } else {
    for (const MetricsReport& report : reports) *out << to_jsonl(report) << "\n";
  }
  return 0;
}

int run_stats(const std::string& path) {
  const LoadedArtifact artifact = load_artifact_at(path);
  const TripletIndex& base =
      artifact.is_family ? artifact.family->base() : *artifact.index;
  const IndexConfig& config = base.config();
  const IndexStats stats = base.stats();

  std::uint64_t container_bytes = base.character_bytes();
  std::uint64_t family_bits = 0;
  if (artifact.is_family) {
    const ShiftedFamily& family = *artifact.family;
    family_bits = family_footprint_bits(config);
    container_bytes += family.reverse_structure().inner().character_bytes();
    for (std::uint32_t i = 1; i <= family.shifted_count(); ++i) {
      container_bytes += family.shifted(i).inner().character_bytes();
    }
  }
  const std::uint64_t index_bits = footprint_bits(config);

  std::cout << "type: " << (artifact.is_family ? "family" : "index") << "\n"
            << "variant: "
            << (base.variant() == ContainerVariant::list ? "list" : "tree") << "\n"
            << "alphabet: " << config.alphabet() << "\n"
            << "k: " << config.k() << "\n"
            << "l: " << config.l() << "\n"
            << "keys: " << stats.key_count << "\n"
            << "containers: " << stats.container_count << "\n"
            << "max container: " << stats.max_container_size << "\n"
            << "avg container: " << stats.avg_container_size << "\n"
            << "index bits: " << index_bits << "\n"
            << "family bits: " << family_bits << "\n"
            << "container bytes: " << container_bytes << "\n"
            << "total bytes: "
            << (index_bits + family_bits + 7) / 8 + container_bytes << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"triplet bit-grid string index"};
  app.require_subcommand(1);

  GenOptions gen_opt;
  BuildOptions build_opt;
  QueryOptions query_opt;
  BenchOptions bench_opt;
  std::string stats_artifact;

  CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic key file");
  gen->add_option("--m", gen_opt.m, "Keys to generate")->capture_default_str();
  gen->add_option("--k", gen_opt.k, "Alphabet size")->capture_default_str();
  gen->add_option("--l", gen_opt.l, "Maximum key length")->capture_default_str();
  gen->add_option("--dist", gen_opt.dist, "Character distribution")
      ->check(CLI::IsMember({"uniform", "zipf"}))
      ->capture_default_str();
  gen->add_option("--zipf-exp", gen_opt.zipf_exp, "Zipf rank exponent")
      ->capture_default_str();
  gen->add_option("--seed", gen_opt.seed, "RNG seed")->capture_default_str();
  gen->add_option("--out", gen_opt.out, "Output key file (stdout when omitted)");

  CLI::App* build = app.add_subcommand("build", "Build and save an index artifact");
  build->add_option("input", build_opt.input, "Key file")->required();
  build->add_option("--out", build_opt.out, "Artifact path")->required();
  build->add_option("--k", build_opt.k,
                    "Canonical alphabet size when the file declares none");
  CLI::Option* l_opt = build->add_option("--l", build_opt.l, "Maximum key length");
  CLI::Option* auto_l =
      build->add_flag("--auto-l", build_opt.auto_l,
                      "Size l from the longest key (at least 3)");
  l_opt->excludes(auto_l);
  auto_l->excludes(l_opt);
  build->add_option("--variant", build_opt.variant, "Container variant")
      ->check(CLI::IsMember({"list", "tree"}))
      ->capture_default_str();
  build->add_flag("--family", build_opt.family,
                  "Build the full family (enables prefix and substring search)");
  build->add_flag("--lenient", build_opt.lenient,
                  "Skip invalid keys instead of aborting");

  CLI::App* query = app.add_subcommand("query", "Query a saved artifact");
  query->add_option("artifact", query_opt.artifact, "Artifact path")->required();
  query->add_option("mode", query_opt.mode, "Query mode")
      ->required()
      ->check(CLI::IsMember({"exact", "prefix", "suffix", "substring"}));
  query->add_option("query", query_opt.query, "Query string")->required();
  query->add_option("--strategy", query_opt.strategy, "Exact-search strategy")
      ->check(CLI::IsMember({"index", "direct", "auto"}))
      ->capture_default_str();
  query->add_option("--cost-ts", query_opt.cost_ts,
                    "Traversal cost for --strategy auto")
      ->capture_default_str();
  query->add_option("--cost-tc", query_opt.cost_tc,
                    "Container probe cost for --strategy auto")
      ->capture_default_str();

  CLI::App* bench = app.add_subcommand("bench", "Run the benchmark protocol");
  bench->add_option("--keys", bench_opt.keys_file,
                    "Bench a key file instead of generating a corpus");
  bench->add_option("--m", bench_opt.m, "Keys to generate")->capture_default_str();
  bench->add_option("--k", bench_opt.k, "Alphabet size")->capture_default_str();
  bench->add_option("--l", bench_opt.l,
                    "Maximum key length (default 16; fitted for --keys)");
  bench->add_option("--dist", bench_opt.dist, "Character distribution")
      ->check(CLI::IsMember({"uniform", "zipf"}))
      ->capture_default_str();
  bench->add_option("--zipf-exp", bench_opt.zipf_exp, "Zipf rank exponent")
      ->capture_default_str();
  bench->add_option("--seed", bench_opt.seed, "RNG seed")->capture_default_str();
  bench->add_option("--variant", bench_opt.variant, "Container variant")
      ->check(CLI::IsMember({"list", "tree"}))
      ->capture_default_str();
  bench->add_flag("--family", bench_opt.family, "Build the full family");
  bench->add_option("--strategy", bench_opt.strategy, "Timed search strategy")
      ->check(CLI::IsMember({"index", "direct"}))
      ->capture_default_str();
  bench->add_option("--repeats", bench_opt.repeats, "Timing repetitions (median)")
      ->check(CLI::Range(1u, 1000u))
      ->capture_default_str();
  bench->add_option("--sweep", bench_opt.sweep, "Vary one dimension")
      ->check(CLI::IsMember({"m", "k", "l", "qlen"}));
  bench->add_option("--values", bench_opt.values, "Sweep values")
      ->delimiter(',');
  bench->add_option("--format", bench_opt.format, "Output format")
      ->check(CLI::IsMember({"jsonl", "table"}))
      ->capture_default_str();
  bench->add_option("--out", bench_opt.out, "Output file (stdout when omitted)");

  CLI::App* stats = app.add_subcommand("stats", "Describe a saved artifact");
  stats->add_option("artifact", stats_artifact, "Artifact path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return run_gen(gen_opt);
    if (build->parsed()) return run_build(build_opt);
    if (query->parsed()) return run_query(query_opt);
    if (bench->parsed()) return run_bench(bench_opt);
    if (stats->parsed()) return run_stats(stats_artifact);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
