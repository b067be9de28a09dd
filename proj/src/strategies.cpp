#include "primepair/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "primepair/primality.hpp"
#include "primepair/sieve.hpp"

namespace primepair {

namespace {

// Absolute slack for the floating pre-filter. Every quantity compared lies
// in [0, 1] and carries a few ulps of rounding, far below this.
constexpr double kFilterSlack = 1e-12;

mpz_class z(std::uint64_t v) { return Rational::from_u64(v).num(); }

// Scores pairs against a fixed (t, epsilon). Decisions are exact; doubles
// only discard pairs that are clearly too far away.
class PairScorer {
 public:
  PairScorer(const Rational& t, const Rational& epsilon)
      : t_num_(t.num()),
        t_den_(t.den()),
        eps_num_(epsilon.num()),
        eps_den_(epsilon.den()),
        t_(t),
        t_d_(t.to_double()),
        eps_d_(epsilon.to_double()) {}

  double approx(std::uint64_t p, std::uint64_t q) const {
    const double value = static_cast<double>(p - q) / (static_cast<double>(p) + static_cast<double>(q));
    return std::fabs(value - t_d_);
  }

  bool within(std::uint64_t p, std::uint64_t q) const {
    if (approx(p, q) > eps_d_ + kFilterSlack) return false;
    const mpz_class sum = z(p) + z(q);
    const mpz_class gap = abs(z(p - q) * t_den_ - t_num_ * sum);
    return gap * eps_den_ < eps_num_ * sum * t_den_;
  }

  Rational exact_error(std::uint64_t p, std::uint64_t q) const {
    const mpz_class sum = z(p) + z(q);
    return Rational(abs(z(p - q) * t_den_ - t_num_ * sum), sum * t_den_);
  }

 private:
  mpz_class t_num_, t_den_, eps_num_, eps_den_;
  Rational t_;
  double t_d_;
  double eps_d_;
};

// Minimum error, then smaller p + q, then smaller p.
class BestTracker {
 public:
  explicit BestTracker(const PairScorer& scorer) : scorer_(scorer) {}

  void offer(std::uint64_t p, std::uint64_t q) {
    const double approx = scorer_.approx(p, q);
    if (best_ && approx > best_approx_ + kFilterSlack) return;
    Rational err = scorer_.exact_error(p, q);
    if (best_) {
      if (err > best_error_) return;
      if (err == best_error_) {
        const auto sum = z(p) + z(q);
        const auto best_sum = z(best_->first) + z(best_->second);
        if (sum > best_sum || (sum == best_sum && p >= best_->first)) return;
      }
    }
    best_ = {p, q};
    best_error_ = std::move(err);
    best_approx_ = approx;
  }

  bool empty() const { return !best_; }
  std::uint64_t p() const { return best_->first; }
  std::uint64_t q() const { return best_->second; }
  const Rational& error() const { return best_error_; }

 private:
  const PairScorer& scorer_;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> best_;
  Rational best_error_;
  double best_approx_ = 0.0;
};

struct Telemetry {
  std::uint64_t candidates = 0;
  std::uint64_t max_prime = 0;

  void touch(std::uint64_t prime) { max_prime = std::max(max_prime, prime); }
};

ApproxResult make_result(std::uint64_t p, std::uint64_t q, const Rational& t, Strategy strategy,
                         const Telemetry& telemetry) {
  PrimePair pair(p, q);
  return ApproxResult{pair, rho(pair), approx_error(pair, t), strategy, telemetry.candidates, telemetry.max_prime};
}

ApproxResult certified(ApproxResult result, const ApproxQuery& query) {
  if (result.value != rho(result.pair) || result.error != approx_error(result.pair, query.t) ||
      !(result.error < query.epsilon))
    throw std::logic_error("search returned an uncertified pair " + to_string(result.pair));
  return result;
}

[[noreturn]] void cap_exceeded(const std::string& what, const BestTracker& best, const ApproxQuery& query,
                               Strategy strategy, const Telemetry& telemetry) {
  std::optional<ApproxResult> reported;
  if (!best.empty()) reported = make_result(best.p(), best.q(), query.t, strategy, telemetry);
  throw SearchCapExceeded(what, std::move(reported), telemetry.candidates, telemetry.max_prime);
}

std::vector<std::uint64_t> direct_stage_bounds(std::uint64_t n0, std::uint64_t n_cap) {
  std::vector<std::uint64_t> bounds;
  for (std::uint64_t n = n0; n <= n_cap; n *= 2) {
    bounds.push_back(n);
    if (n > std::numeric_limits<std::uint64_t>::max() / 2) break;
  }
  if (bounds.empty() || bounds.back() != n_cap) bounds.push_back(n_cap);
  return bounds;
}

ApproxResult direct_first(const ApproxQuery& query) {
  const PairScorer scorer(query.t, query.epsilon);
  BestTracker best(scorer);
  Telemetry telemetry;
  std::uint64_t previous = 0;
  for (std::uint64_t bound : direct_stage_bounds(query.direct_n0, query.direct_n_cap)) {
    const auto table = primes_up_to(bound);
    const auto primes = table.primes();
    // Pairs with p in (previous, bound], lexicographic in (q, p).
    const auto fresh = std::upper_bound(primes.begin(), primes.end(), previous) - primes.begin();
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const std::uint64_t q = primes[i];
      for (auto j = std::max<std::size_t>(i + 1, static_cast<std::size_t>(fresh)); j < primes.size(); ++j) {
        const std::uint64_t p = primes[j];
        ++telemetry.candidates;
        telemetry.touch(p);
        if (scorer.within(p, q)) return make_result(p, q, query.t, Strategy::direct, telemetry);
        best.offer(p, q);
      }
    }
    previous = bound;
  }
  cap_exceeded("direct search found no pair with p, q <= " + std::to_string(query.direct_n_cap) +
                   " within epsilon " + query.epsilon.str(),
               best, query, Strategy::direct, telemetry);
}

// rho is increasing in p for fixed q, so the minimum over p for a given q is
// attained at one of the two primes bracketing q r.
ApproxResult direct_best(const ApproxQuery& query) {
  const PairScorer scorer(query.t, query.epsilon);
  BestTracker best(scorer);
  Telemetry telemetry;
  const Rational r = target_ratio(query.t);
  const auto table = primes_up_to(query.direct_n_cap);
  const auto primes = table.primes();
  for (std::size_t i = 0; i + 1 < primes.size(); ++i) {
    const std::uint64_t q = primes[i];
    const mpz_class ideal = (Rational::from_u64(q) * r).floor();
    auto it = primes.end();
    if (ideal < z(primes.back()))
      it = std::upper_bound(primes.begin() + static_cast<std::ptrdiff_t>(i) + 1, primes.end(), ideal.get_ui());
    // *it is the first prime above floor(q r); the one before it is at or below.
    for (auto candidate : {it - 1, it}) {
      if (candidate == primes.end() || *candidate <= q) continue;
      ++telemetry.candidates;
      telemetry.touch(*candidate);
      best.offer(*candidate, q);
    }
  }
  if (best.empty() || !(best.error() < query.epsilon))
    cap_exceeded("no pair with p, q <= " + std::to_string(query.direct_n_cap) + " is within epsilon " +
                     query.epsilon.str(),
                 best, query, Strategy::direct, telemetry);
  return make_result(best.p(), best.q(), query.t, Strategy::direct, telemetry);
}

}  // namespace

std::string_view to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::targeted: return "targeted";
    case SearchMode::direct: return "direct";
    case SearchMode::automatic: return "auto";
  }
  return "?";
}

std::string_view to_string(ReturnPolicy policy) {
  return policy == ReturnPolicy::first ? "first" : "best";
}

std::string_view to_string(Strategy strategy) { return strategy == Strategy::targeted ? "targeted" : "direct"; }

SearchMode parse_search_mode(std::string_view text) {
  if (text == "targeted") return SearchMode::targeted;
  if (text == "direct") return SearchMode::direct;
  if (text == "auto") return SearchMode::automatic;
  throw DomainError("unknown search mode '" + std::string(text) + "' (expected targeted, direct or auto)");
}

ReturnPolicy parse_return_policy(std::string_view text) {
  if (text == "first") return ReturnPolicy::first;
  if (text == "best") return ReturnPolicy::best_within_cap;
  throw DomainError("unknown return policy '" + std::string(text) + "' (expected first or best)");
}

void ApproxQuery::validate() const {
  require_unit_interval(t, "t");
  if (epsilon.sign() <= 0) throw DomainError("epsilon must be positive, got " + epsilon.str());
  if (q_start < 2) throw DomainError("q_start must be at least 2");
  if (q_cap < q_start) throw DomainError("q_cap must be at least q_start");
  if (direct_n0 < 5) throw DomainError("direct N0 must be at least 5");
  if (direct_n_cap < direct_n0) throw DomainError("direct N cap must be at least N0");
}

ApproxResult targeted_search(const ApproxQuery& query) {
  query.validate();
  const Rational r = target_ratio(query.t);
  const mpz_class twice_num = 2 * r.num();
  const mpz_class twice_den = 2 * r.den();
  const PairScorer scorer(query.t, query.epsilon);
  BestTracker best(scorer);
  Telemetry telemetry;
  const bool stop_at_first = query.policy == ReturnPolicy::first;

  std::uint64_t q = is_prime(query.q_start) ? query.q_start : next_prime(query.q_start);
  for (; q <= query.q_cap; q = next_prime(q)) {
    telemetry.touch(q);
    // round-half-up(q r) = floor((2 q num + den) / (2 den))
    mpz_class x_z = (z(q) * twice_num + r.den()) / twice_den;
    if (x_z >= z(kLargestPrime64))
      cap_exceeded("targeted search left the 64-bit range at q = " + std::to_string(q), best, query,
                   Strategy::targeted, telemetry);
    for (std::uint64_t p : nearest_primes(x_z.get_ui())) {
      if (p <= q) continue;
      ++telemetry.candidates;
      telemetry.touch(p);
      if (stop_at_first && scorer.within(p, q))
        return certified(make_result(p, q, query.t, Strategy::targeted, telemetry), query);
      best.offer(p, q);
    }
    if (q >= kLargestPrime64) break;
  }
  if (!stop_at_first && !best.empty() && best.error() < query.epsilon)
    return certified(make_result(best.p(), best.q(), query.t, Strategy::targeted, telemetry), query);
  cap_exceeded("targeted search exhausted q <= " + std::to_string(query.q_cap) + " without reaching epsilon " +
                   query.epsilon.str(),
               best, query, Strategy::targeted, telemetry);
}

ApproxResult direct_search(const ApproxQuery& query) {
  query.validate();
  auto result = query.policy == ReturnPolicy::first ? direct_first(query) : direct_best(query);
  return certified(std::move(result), query);
}

ApproxResult approximate(const ApproxQuery& query) {
  query.validate();
  switch (query.mode) {
    case SearchMode::targeted: return targeted_search(query);
    case SearchMode::direct: return direct_search(query);
    case SearchMode::automatic: break;
  }
  std::uint64_t spent_candidates = 0;
  std::uint64_t spent_max_prime = 0;
  std::optional<ApproxResult> targeted_best;
  try {
    return targeted_search(query);
  } catch (const SearchCapExceeded& e) {
    targeted_best = e.best();
    spent_candidates = e.candidates_examined();
    spent_max_prime = e.max_prime_touched();
  }
  auto merge = [&](ApproxResult r) {
    r.candidates_examined += spent_candidates;
    r.max_prime_touched = std::max(r.max_prime_touched, spent_max_prime);
    return r;
  };
  try {
    return merge(direct_search(query));
  } catch (const SearchCapExceeded& e) {
    const std::uint64_t candidates = spent_candidates + e.candidates_examined();
    const std::uint64_t max_prime = std::max(spent_max_prime, e.max_prime_touched());
    std::optional<ApproxResult> overall = targeted_best;
    if (e.best() && (!overall || e.best()->error < overall->error)) overall = e.best();
    if (overall) {
      overall->candidates_examined = candidates;
      overall->max_prime_touched = max_prime;
    }
    throw SearchCapExceeded("targeted and direct search both exhausted their caps", std::move(overall), candidates,
                            max_prime);
  }
}

}  // namespace primepair
