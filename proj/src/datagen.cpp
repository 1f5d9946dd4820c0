#include "trigrid/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

namespace trigrid {

namespace {

// Uppercase, lowercase, digits, then punctuation.  '#' and '%' are absent:
// the key-file format uses them for comments and directives.
const std::string kCanonical =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
    "abcdefghijklmnopqrstuvwxyz"
    "0123456789"
    "!\"$&'()*+,-./:;<=>?@[\\]^_`{|}~";

// Unbiased draw from [0, bound); rejection keeps it portable across
// platforms, unlike std::uniform_int_distribution.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  for (;;) {
    const std::uint64_t raw = rng();
    const std::uint64_t slot = raw % bound;
    if (raw - slot <= std::numeric_limits<std::uint64_t>::max() - (bound - 1)) {
      return slot;
    }
  }
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void shuffle_keys(std::vector<std::string>& keys, std::mt19937_64& rng) {
  for (std::size_t i = keys.size(); i > 1; --i) {
    std::swap(keys[i - 1], keys[uniform_below(rng, i)]);
  }
}

// Cumulative rank probabilities for mass proportional to rank^-exponent.
std::vector<double> zipf_cdf(std::uint32_t k, double exponent) {
  std::vector<double> cdf(k);
  double total = 0.0;
  for (std::uint32_t rank = 1; rank <= k; ++rank) {
    total += std::pow(static_cast<double>(rank), -exponent);
    cdf[rank - 1] = total;
  }
  for (double& c : cdf) c /= total;
  cdf.back() = 1.0;
  return cdf;
}

}  // namespace

std::uint32_t canonical_symbol_limit() {
  return static_cast<std::uint32_t>(kCanonical.size());
}

std::string canonical_alphabet(std::uint32_t k) {
  if (k < 2 || k > canonical_symbol_limit()) {
    throw std::invalid_argument("alphabet size out of range");
  }
  return kCanonical.substr(0, k);
}

std::vector<std::string> generate_keys(const GenSpec& spec) {
  if (spec.m == 0) throw std::invalid_argument("key count must be positive");
  if (spec.l == 0) throw std::invalid_argument("maximum length must be positive");
  if (spec.distribution == Distribution::zipfian && !(spec.zipf_exponent > 0.0)) {
    throw std::invalid_argument("zipf exponent must be positive");
  }
  const std::string alphabet = canonical_alphabet(spec.k);

  std::vector<double> cdf;
  if (spec.distribution == Distribution::zipfian) {
    cdf = zipf_cdf(spec.k, spec.zipf_exponent);
  }

  std::mt19937_64 rng(spec.seed);
  std::vector<std::string> keys;
  keys.reserve(spec.m);
  for (std::uint64_t i = 0; i < spec.m; ++i) {
    const std::uint64_t length = 1 + uniform_below(rng, spec.l);
    std::string key(length, '\0');
    for (auto& ch : key) {
      std::size_t rank;
      if (spec.distribution == Distribution::uniform) {
        rank = uniform_below(rng, spec.k);
      } else {
        const double u = uniform_unit(rng);
        rank = static_cast<std::size_t>(
            std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        if (rank >= spec.k) rank = spec.k - 1;
      }
      ch = alphabet[rank];
    }
    keys.push_back(std::move(key));
  }
  return keys;
}

Workload build_workload(const std::vector<std::string>& keys, std::uint64_t seed) {
  if (keys.empty()) throw std::invalid_argument("workload needs at least one key");

  Workload w;
  const std::size_t insert_count = keys.size() * 2 / 3;
  w.insert_keys.assign(keys.begin(), keys.begin() + insert_count);

  const std::set<std::string> inserted(w.insert_keys.begin(), w.insert_keys.end());
  const std::vector<std::string> distinct(inserted.begin(), inserted.end());

  std::mt19937_64 rng(seed);

  std::vector<std::string> pool = distinct;
  shuffle_keys(pool, rng);
  pool.resize(distinct.size() / 2);
  w.successful_queries = std::move(pool);

  std::set<std::string> taken;
  for (std::size_t i = insert_count; i < keys.size(); ++i) {
    if (inserted.count(keys[i]) || !taken.insert(keys[i]).second) continue;
    w.unsuccessful_queries.push_back(keys[i]);
  }

  const std::size_t fragment_count = std::min<std::size_t>(distinct.size(), 1000);
  const auto draw_key = [&]() -> const std::string& {
    return distinct[uniform_below(rng, distinct.size())];
  };
  for (std::size_t i = 0; i < fragment_count; ++i) {
    const std::string& key = draw_key();
    const std::uint64_t len = 1 + uniform_below(rng, key.size());
    w.prefix_queries.push_back(key.substr(0, len));
  }
  for (std::size_t i = 0; i < fragment_count; ++i) {
    const std::string& key = draw_key();
    const std::uint64_t len = 1 + uniform_below(rng, key.size());
    w.suffix_queries.push_back(key.substr(key.size() - len));
  }
  for (std::size_t i = 0; i < fragment_count; ++i) {
    const std::string& key = draw_key();
    const std::uint64_t start = uniform_below(rng, key.size());
    const std::uint64_t len = 1 + uniform_below(rng, key.size() - start);
    w.substring_queries.push_back(key.substr(start, len));
  }
  return w;
}

}  // namespace trigrid
