// Probability and cost model for search-strategy selection.  Each quantity
// comes in an exact product form (always a probability, never clamped) and,
// where the derivation drops higher-order terms, a first-order approximation
// clamped to [0,1] plus a closed-form ceiling bound that replaces the length
// histograms by the key count m.  Pure functions over immutable inputs.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigrid/index.hpp"

namespace trigrid {

class CalibrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Length profile of a corpus: m keys in total (shortstore included), with
// g(w) grid-indexed keys of length exactly w and f(w) of length at least w.
struct CorpusProfile {
  std::uint32_t k = 2;
  std::uint32_t l = 3;
  std::uint64_t m = 0;
  std::uint64_t total_chars = 0;               // d
  std::vector<std::uint64_t> exact_counts;     // g(w) at index w; size l+1, slot 0 unused
  std::vector<std::uint64_t> at_least_counts;  // f(w) likewise

  std::uint64_t f(std::uint32_t w) const;  // zero outside 1..l
  std::uint64_t g(std::uint32_t w) const;

  // Checks the histogram invariants: f is the tail sum of g and is
  // non-increasing, f(1) <= m, d <= m*l.  Throws std::invalid_argument.
  void validate() const;

  // Modeling ceiling with f(w) = g(w) = m at every position.  Deliberately
  // skips validate(): it is the ceiling substituted into the closed forms,
  // not a realizable corpus.
  static CorpusProfile uniform(std::uint32_t k, std::uint32_t l, std::uint64_t m);
};

// Reads the maintained histograms of a live index.
CorpusProfile profile_of(const TripletIndex& idx);

// Search cost inputs, in nanoseconds (any consistent unit works).
struct CostModel {
  double traversal_cost = 1.0;      // T_s, one full position-bit walk
  double container_cost = 10.0;     // T_c, one container probe
  double avg_container_cost = 10.0; // T, mean probe cost until calibrated
};

// Probability that some key has the given character position occupied:
// 1 - (1 - 1/k)^f(w).  Requires 1 <= w <= l.
double p_char(const CorpusProfile& profile, std::uint32_t w);

struct TripletProbability {
  double exact = 0.0;   // product of the three character probabilities
  double approx = 0.0;  // first-order form, clamped to [0,1]
};

// Probability that a triplet occurs at position w; requires w <= l-2.
TripletProbability p_triplet(const CorpusProfile& profile, std::uint32_t w);

// Probability that a triplet ends a key at position w: the last character
// counts only keys of length exactly w+2.  Requires w <= l-2.
TripletProbability p_triplet_end(const CorpusProfile& profile, std::uint32_t w);

struct FalsePositiveEstimate {
  double exact = 0.0;   // product over all n-2 triplets, end form last
  double approx = 0.0;  // first-order form, clamped to [0,1]
  double bound = 0.0;   // ceiling form max(0, 1 - 3(n-2)(1-1/k)^m)
};

// Probability that an unsuccessful key of length n survives every bit test
// and reaches a container.  Requires 3 <= n <= l.
FalsePositiveEstimate p_false_positive(const CorpusProfile& profile, std::uint32_t n);

struct ExpectedTimes {
  double index_time = 0.0;   // T_i = T_s + P_n * T_c
  double direct_time = 0.0;  // T_d = end-triplet probability * T_c
};

// Expected unsuccessful-search times under both strategies, exact forms.
ExpectedTimes expected_times(const CostModel& cost, const CorpusProfile& profile, std::uint32_t n);

struct StrategyReport {
  SearchStrategy recommended = SearchStrategy::index_search;
  double index_time = 0.0;
  double direct_time = 0.0;
  double probability_gap = 0.0;       // end-triplet probability minus P_n
  double closed_form_threshold = 0.0; // 3(n-3)(1-1/k)^m
  bool closed_form_prefers_index = false;
};

// Advises index search iff T_s <= gap * T_c using the exact forms; the
// ceiling-substituted closed-form test is exposed alongside for reporting.
StrategyReport choose_strategy(const CostModel& cost, const CorpusProfile& profile,
                               std::uint32_t n);

// Probability that a prefix of the given length survives candidate pruning:
// the ceiling form max(0, 1 - 3(len-2)(1-1/k)^m), clamped to [0,1].
// Requires len >= 3.
double p_prefix(const CorpusProfile& profile, std::uint32_t prefix_length);

// Expected prefix searches issued per substring query: l trials of the
// above (all l shifted structures counted, feasible or not).
double expected_prefix_searches(const CorpusProfile& profile, std::uint32_t prefix_length);

// Measures mean traversal and container-probe durations (nanoseconds) over
// the sample; the sample must contain at least one key of length >= 3.
CostModel calibrate(const TripletIndex& idx, const std::vector<std::string>& sample);

}  // namespace trigrid
