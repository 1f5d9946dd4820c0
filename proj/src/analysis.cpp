#include "trigrid/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace trigrid {

namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

// (1 - 1/k)^count
double miss_power(std::uint32_t k, std::uint64_t count) {
  return std::pow(1.0 - 1.0 / static_cast<double>(k), static_cast<double>(count));
}

void check_position(const CorpusProfile& profile, std::uint32_t w, std::uint32_t slack) {
  if (w < 1 || w + slack > profile.l) throw std::out_of_range("position outside the profile");
}

}  // namespace

std::uint64_t CorpusProfile::f(std::uint32_t w) const {
  return (w >= 1 && w < at_least_counts.size()) ? at_least_counts[w] : 0;
}

std::uint64_t CorpusProfile::g(std::uint32_t w) const {
  return (w >= 1 && w < exact_counts.size()) ? exact_counts[w] : 0;
}

void CorpusProfile::validate() const {
  if (k < 2) throw std::invalid_argument("alphabet must have at least two symbols");
  if (l < 3) throw std::invalid_argument("capacity must cover at least one triplet");
  if (exact_counts.size() != l + 1 || at_least_counts.size() != l + 1)
    throw std::invalid_argument("histograms must cover positions 1..l");
  std::uint64_t tail = 0;
  for (std::uint32_t w = l; w >= 1; --w) {
    tail += exact_counts[w];
    if (at_least_counts[w] != tail)
      throw std::invalid_argument("f must be the tail sum of g");
    if (w < l && at_least_counts[w] < at_least_counts[w + 1])
      throw std::invalid_argument("f must be non-increasing");
  }
  if (at_least_counts[1] > m) throw std::invalid_argument("f(1) must not exceed m");
  if (total_chars > m * static_cast<std::uint64_t>(l))
    throw std::invalid_argument("total characters exceed m*l");
}

CorpusProfile CorpusProfile::uniform(std::uint32_t k, std::uint32_t l, std::uint64_t m) {
  CorpusProfile p;
  p.k = k;
  p.l = l;
  p.m = m;
  p.total_chars = m * static_cast<std::uint64_t>(l);
  p.exact_counts.assign(l + 1, m);
  p.at_least_counts.assign(l + 1, m);
  p.exact_counts[0] = 0;
  p.at_least_counts[0] = 0;
  return p;
}

CorpusProfile profile_of(const TripletIndex& idx) {
  CorpusProfile p;
  p.k = idx.config().k();
  p.l = idx.config().l();
  p.m = idx.key_count();
  p.total_chars = idx.total_characters();
  p.exact_counts.assign(p.l + 1, 0);
  p.at_least_counts.assign(p.l + 1, 0);
  std::uint64_t tail = 0;
  for (std::uint32_t w = p.l; w >= 1; --w) {
    p.exact_counts[w] = idx.length_count(w);
    tail += p.exact_counts[w];
    p.at_least_counts[w] = tail;
  }
  return p;
}

double p_char(const CorpusProfile& profile, std::uint32_t w) {
  check_position(profile, w, 0);
  return 1.0 - miss_power(profile.k, profile.f(w));
}

TripletProbability p_triplet(const CorpusProfile& profile, std::uint32_t w) {
  check_position(profile, w, 2);
  TripletProbability p;
  p.exact = p_char(profile, w) * p_char(profile, w + 1) * p_char(profile, w + 2);
  double sum = 0.0;
  for (std::uint32_t i = w; i <= w + 2; ++i) sum += miss_power(profile.k, profile.f(i));
  p.approx = clamp01(1.0 - sum);
  return p;
}

TripletProbability p_triplet_end(const CorpusProfile& profile, std::uint32_t w) {
  check_position(profile, w, 2);
  TripletProbability p;
  double end_char = 1.0 - miss_power(profile.k, profile.g(w + 2));
  p.exact = p_char(profile, w) * p_char(profile, w + 1) * end_char;
  p.approx = clamp01(1.0 - miss_power(profile.k, profile.f(w)) -
                     miss_power(profile.k, profile.f(w + 1)) -
                     miss_power(profile.k, profile.g(w + 2)));
  return p;
}

FalsePositiveEstimate p_false_positive(const CorpusProfile& profile, std::uint32_t n) {
  if (n < 3 || n > profile.l) throw std::out_of_range("key length outside the profile");
  FalsePositiveEstimate est;

  est.exact = p_triplet_end(profile, n - 2).exact;
  for (std::uint32_t j = 1; j + 3 <= n; ++j) est.exact *= p_triplet(profile, j).exact;

  double sum = 0.0;
  for (std::uint32_t j = 1; j <= n - 2; ++j)
    for (std::uint32_t i = j; i <= j + 2; ++i) sum += miss_power(profile.k, profile.f(i));
  est.approx = clamp01(1.0 - sum + miss_power(profile.k, profile.f(n)) -
                       miss_power(profile.k, profile.g(n)));

  est.bound = std::max(0.0, 1.0 - 3.0 * (n - 2) * miss_power(profile.k, profile.m));
  return est;
}

ExpectedTimes expected_times(const CostModel& cost, const CorpusProfile& profile,
                             std::uint32_t n) {
  ExpectedTimes t;
  t.index_time = cost.traversal_cost + p_false_positive(profile, n).exact * cost.container_cost;
  t.direct_time = p_triplet_end(profile, n - 2).exact * cost.container_cost;
  return t;
}

StrategyReport choose_strategy(const CostModel& cost, const CorpusProfile& profile,
                               std::uint32_t n) {
  StrategyReport report;
  ExpectedTimes t = expected_times(cost, profile, n);
  report.index_time = t.index_time;
  report.direct_time = t.direct_time;
  report.probability_gap =
      p_triplet_end(profile, n - 2).exact - p_false_positive(profile, n).exact;
  report.recommended = cost.traversal_cost <= report.probability_gap * cost.container_cost
                           ? SearchStrategy::index_search
                           : SearchStrategy::direct_search;
  report.closed_form_threshold = 3.0 * (n - 3) * miss_power(profile.k, profile.m);
  report.closed_form_prefers_index =
      cost.traversal_cost <= report.closed_form_threshold * cost.container_cost;
  return report;
}

double p_prefix(const CorpusProfile& profile, std::uint32_t prefix_length) {
  if (prefix_length < 3) throw std::out_of_range("prefix shorter than one triplet");
  return clamp01(1.0 - 3.0 * (prefix_length - 2) * miss_power(profile.k, profile.m));
}

double expected_prefix_searches(const CorpusProfile& profile, std::uint32_t prefix_length) {
  return static_cast<double>(profile.l) * p_prefix(profile, prefix_length);
}

CostModel calibrate(const TripletIndex& idx, const std::vector<std::string>& sample) {
  if (sample.empty()) throw CalibrationError("calibration requires a non-empty query sample");
  const IndexConfig& cfg = idx.config();
  bool have_long = false;
  for (const std::string& key : sample) {
    if (key.empty() || key.size() > cfg.l()) throw CalibrationError("sample key length out of range");
    for (char c : key) cfg.code(c);
    have_long = have_long || key.size() >= 3;
  }
  if (!have_long) throw CalibrationError("sample contains no key long enough to probe");

  using clock = std::chrono::steady_clock;
  volatile std::uint64_t sink = 0;

  // Repeats the workload until the clock sees it, then averages.
  auto timed = [&](auto&& body) {
    std::uint64_t reps = 1;
    while (true) {
      std::uint64_t ops = 0;
      auto begin = clock::now();
      for (std::uint64_t r = 0; r < reps; ++r) ops += body();
      auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - begin);
      if (elapsed.count() >= 2000000) {
        return static_cast<double>(elapsed.count()) / static_cast<double>(ops);
      }
      reps *= 2;
    }
  };

  double traversal = timed([&] {
    std::uint64_t walks = 0;
    for (const std::string& key : sample) {
      if (key.size() < 3) continue;
      std::uint32_t a = cfg.code(key[0]);
      std::uint32_t b = cfg.code(key[1]);
      std::uint64_t hits = 0;
      for (std::uint32_t w = 1; w + 1 < key.size(); ++w) {
        std::uint32_t c = cfg.code(key[w + 1]);
        if (!idx.grid().test_position(TripletId{a, b, c}, w)) break;
        ++hits;
        a = b;
        b = c;
      }
      sink = sink + hits;
      ++walks;
    }
    return walks;
  });

  double probe = timed([&] {
    std::uint64_t probes = 0;
    for (const std::string& key : sample) {
      if (key.size() < 3) continue;
      const std::size_t n = key.size();
      TripletId last{cfg.code(key[n - 3]), cfg.code(key[n - 2]), cfg.code(key[n - 1])};
      const Container* container = idx.container_at(last, static_cast<std::uint32_t>(n) - 2);
      if (container != nullptr && container->contains_head(key.substr(0, n - 3))) sink = sink + 1;
      ++probes;
    }
    return probes;
  });

  CostModel cost;
  cost.traversal_cost = traversal;
  cost.container_cost = probe;
  cost.avg_container_cost = probe;
  return cost;
}

}  // namespace trigrid
