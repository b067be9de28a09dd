#include "primepair/density.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "primepair/errors.hpp"
#include "primepair/sieve.hpp"

namespace primepair {

namespace {

struct Fraction {
  std::uint64_t num;
  std::uint64_t den;
};

bool less(const Fraction& a, const Fraction& b) {
  using u128 = unsigned __int128;
  return static_cast<u128>(a.num) * b.den < static_cast<u128>(b.num) * a.den;
}

}  // namespace

std::vector<Rational> sample_SN(std::uint64_t N, std::uint64_t cap) {
  if (N < 5) throw DomainError("S_N needs N >= 5, got " + std::to_string(N));
  if (N > cap)
    throw CapExceeded("S_N sampling is capped at N = " + std::to_string(cap) + ", got " + std::to_string(N));
  const auto table = primes_up_to(N);
  const auto primes = table.primes();

  std::vector<Fraction> values;
  values.reserve(primes.size() * (primes.size() - 1) / 2);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      const std::uint64_t diff = primes[j] - primes[i];
      const std::uint64_t sum = primes[j] + primes[i];
      const std::uint64_t g = std::gcd(diff, sum);
      values.push_back({diff / g, sum / g});
    }
  }
  std::sort(values.begin(), values.end(), less);
  // Reduced fractions: equal values have equal fields.
  values.erase(std::unique(values.begin(), values.end(),
                           [](const Fraction& a, const Fraction& b) { return a.num == b.num && a.den == b.den; }),
               values.end());

  std::vector<Rational> out;
  out.reserve(values.size());
  for (const auto& f : values) out.push_back(Rational::from_u64(f.num, f.den));
  return out;
}

Rational max_gap_in_window(std::span<const Rational> ascending, const Rational& a, const Rational& b) {
  Rational previous = a;
  Rational widest;
  auto it = std::lower_bound(ascending.begin(), ascending.end(), a);
  for (; it != ascending.end() && *it <= b; ++it) {
    if (*it - previous > widest) widest = *it - previous;
    previous = *it;
  }
  if (b - previous > widest) widest = b - previous;
  return widest;
}

DensityReport density_report(std::uint64_t N, const Rational& a, const Rational& b, std::uint64_t cap) {
  if (!(a.sign() > 0 && a < b && b < Rational(1)))
    throw DomainError("density window must satisfy 0 < a < b < 1, got [" + a.str() + ", " + b.str() + "]");
  const auto values = sample_SN(N, cap);
  const std::uint64_t pi = prime_count(N);

  DensityReport report;
  report.N = N;
  report.pair_count = pi * (pi - 1) / 2;
  report.distinct_count = values.size();
  report.window_a = a;
  report.window_b = b;
  report.in_window_count = static_cast<std::uint64_t>(std::upper_bound(values.begin(), values.end(), b) -
                                                      std::lower_bound(values.begin(), values.end(), a));
  report.max_gap_in_window = max_gap_in_window(values, a, b);
  report.avg_spacing = (values.back() - values.front()) / Rational::from_u64(values.size() - 1);
  const double n = static_cast<double>(N);
  report.heuristic_avg_spacing = std::log(n) * std::log(n) / (n * n);
  return report;
}

std::vector<ComplexityProbeRow> complexity_probe(std::span<const Rational> t_grid, std::span<const Rational> eps_grid,
                                                 const ApproxQuery& base) {
  if (t_grid.empty() || eps_grid.empty()) throw DomainError("probe grids must be nonempty");
  for (const auto& t : t_grid) require_unit_interval(t, "probe t");
  for (const auto& eps : eps_grid)
    if (eps.sign() <= 0) throw DomainError("probe epsilon must be positive, got " + eps.str());

  std::vector<ComplexityProbeRow> rows;
  rows.reserve(t_grid.size() * eps_grid.size());
  for (const auto& t : t_grid) {
    for (const auto& eps : eps_grid) {
      ApproxQuery query = base;
      query.t = t;
      query.epsilon = eps;
      ComplexityProbeRow row;
      row.t = t;
      row.epsilon = eps;
      try {
        const ApproxResult result = approximate(query);
        row.ok = true;
        row.pair = result.pair;
        row.error = result.error;
        row.max_prime_touched = result.max_prime_touched;
        row.candidates_examined = result.candidates_examined;
        row.strategy_used = result.strategy_used;
      } catch (const SearchCapExceeded& e) {
        if (e.best()) {
          row.pair = e.best()->pair;
          row.error = e.best()->error;
          row.strategy_used = e.best()->strategy_used;
        }
        row.max_prime_touched = e.max_prime_touched();
        row.candidates_examined = e.candidates_examined();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<ProbeTrendPoint> probe_trend(std::span<const ComplexityProbeRow> rows) {
  std::vector<ProbeTrendPoint> trend;
  for (const auto& row : rows) {
    auto it = std::find_if(trend.begin(), trend.end(), [&](const auto& p) { return p.epsilon == row.epsilon; });
    if (it == trend.end()) {
      trend.push_back({row.epsilon, row.max_prime_touched});
    } else {
      it->max_prime_touched = std::max(it->max_prime_touched, row.max_prime_touched);
    }
  }
  return trend;
}

MonotoneCount count_monotone_steps(std::span<const ComplexityProbeRow> rows) {
  std::map<Rational, std::vector<const ComplexityProbeRow*>> by_t;
  for (const auto& row : rows) by_t[row.t].push_back(&row);
  MonotoneCount count;
  for (auto& [t, group] : by_t) {
    std::stable_sort(group.begin(), group.end(), [](auto* x, auto* y) { return x->epsilon > y->epsilon; });
    for (std::size_t i = 1; i < group.size(); ++i) {
      ++count.comparisons;
      if (group[i]->max_prime_touched >= group[i - 1]->max_prime_touched) ++count.nondecreasing;
    }
  }
  return count;
}

}  // namespace primepair
