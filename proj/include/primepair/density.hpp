#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "primepair/ratio.hpp"
#include "primepair/rational.hpp"
#include "primepair/strategies.hpp"

namespace primepair {

inline constexpr std::uint64_t kDefaultSampleCap = 10'000;

/// Every distinct (p - q)/(p + q) over primes q < p <= N, strictly ascending.
/// Requires 5 <= N <= cap; throws DomainError below, CapExceeded above.
std::vector<Rational> sample_SN(std::uint64_t N, std::uint64_t cap = kDefaultSampleCap);

struct DensityReport {
  std::uint64_t N = 0;
  std::uint64_t pair_count = 0;      // C(pi(N), 2)
  std::uint64_t distinct_count = 0;  // |S_N|
  Rational window_a;
  Rational window_b;
  std::uint64_t in_window_count = 0;
  /// Widest gap between consecutive elements inside [a, b], boundary gaps
  /// a -> first and last -> b included.
  Rational max_gap_in_window;
  /// (max S_N - min S_N) / (|S_N| - 1).
  Rational avg_spacing;
  /// ln^2 N / N^2, for comparison only.
  double heuristic_avg_spacing = 0.0;
};

/// Requires 0 < a < b < 1 and the sample_SN preconditions.
DensityReport density_report(std::uint64_t N, const Rational& a, const Rational& b,
                             std::uint64_t cap = kDefaultSampleCap);

/// Max gap of an ascending set restricted to [a, b], boundary gaps included.
Rational max_gap_in_window(std::span<const Rational> ascending, const Rational& a, const Rational& b);

struct ComplexityProbeRow {
  Rational t;
  Rational epsilon;
  bool ok = false;  // false: the run hit its caps
  std::optional<PrimePair> pair;
  std::optional<Rational> error;
  std::uint64_t max_prime_touched = 0;
  std::uint64_t candidates_examined = 0;
  std::optional<Strategy> strategy_used;
};

/// One approximate() run per (t, epsilon), t-major. Caps and mode come from
/// `base`; its t and epsilon are ignored. Capped runs are kept and flagged.
std::vector<ComplexityProbeRow> complexity_probe(std::span<const Rational> t_grid,
                                                 std::span<const Rational> eps_grid,
                                                 const ApproxQuery& base = {});

struct ProbeTrendPoint {
  Rational epsilon;
  std::uint64_t max_prime_touched = 0;  // max over t
};

/// For each epsilon (in grid order), the largest max_prime_touched over t.
std::vector<ProbeTrendPoint> probe_trend(std::span<const ComplexityProbeRow> rows);

struct MonotoneCount {
  std::uint64_t nondecreasing = 0;
  std::uint64_t comparisons = 0;
};

/// For each t, walk its rows in order of decreasing epsilon and count the
/// adjacent steps where max_prime_touched does not decrease.
MonotoneCount count_monotone_steps(std::span<const ComplexityProbeRow> rows);

}  // namespace primepair
