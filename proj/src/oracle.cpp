#include "primepair/oracle.hpp"

#include <set>
#include <string>

#include "primepair/errors.hpp"

namespace primepair::oracle {

namespace {

void require_t(const Rational& t) {
  if (t.sign() <= 0 || t >= Rational(1)) throw DomainError("oracle: t must lie in (0, 1)");
}

mpz_class z(std::uint64_t v) { return Rational::from_u64(v).num(); }

// |(p - q) den - num (p + q)| * eps_den < eps_num (p + q) den
bool below(std::uint64_t p, std::uint64_t q, const Rational& t, const Rational& epsilon) {
  const mpz_class diff = z(p) - z(q);
  const mpz_class sum = z(p) + z(q);
  const mpz_class gap = abs(diff * t.den() - t.num() * sum);
  return gap * epsilon.den() < epsilon.num() * sum * t.den();
}

std::vector<std::uint64_t> primes_by_trial_division(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n)
    if (trial_division_is_prime(n)) out.push_back(n);
  return out;
}

}  // namespace

bool trial_division_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

Rational pair_error(std::uint64_t p, std::uint64_t q, const Rational& t) {
  const mpz_class diff = z(p) - z(q);
  const mpz_class sum = z(p) + z(q);
  return Rational(abs(diff * t.den() - t.num() * sum), sum * t.den());
}

OracleAnswer best_pair_up_to(std::uint64_t N, const Rational& t) {
  if (N < 5 || N > kMaxOracleN)
    throw DomainError("oracle: N must lie in [5, " + std::to_string(kMaxOracleN) + "]");
  require_t(t);
  const auto primes = primes_by_trial_division(N);
  std::optional<OracleAnswer> best;
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      ++rank;
      const std::uint64_t q = primes[i];
      const std::uint64_t p = primes[j];
      Rational err = pair_error(p, q, t);
      bool better = !best;
      if (best) {
        const auto bp = best->pair.p(), bq = best->pair.q();
        if (err != best->error)
          better = err < best->error;
        else if (p + q != bp + bq)
          better = p + q < bp + bq;
        else
          better = p < bp;
      }
      if (better) best = OracleAnswer{PrimePair(p, q), std::move(err), rank};
    }
  }
  return *best;
}

std::optional<OracleAnswer> replay_targeted_order(const Rational& t, const Rational& epsilon,
                                                  std::uint64_t q_start, std::uint64_t q_stop) {
  require_t(t);
  if (epsilon.sign() <= 0) throw DomainError("oracle: epsilon must be positive");
  // x = floor((2 q (den + num) + (den - num)) / (2 (den - num)))
  const mpz_class up = t.den() + t.num();
  const mpz_class down = t.den() - t.num();
  std::uint64_t rank = 0;
  for (std::uint64_t q = q_start < 2 ? 2 : q_start; q <= q_stop; ++q) {
    if (!trial_division_is_prime(q)) continue;
    mpz_class x_z;
    const mpz_class numerator = 2 * z(q) * up + down;
    const mpz_class denominator = 2 * down;
    mpz_fdiv_q(x_z.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
    const std::uint64_t x = x_z.get_ui();

    std::vector<std::uint64_t> candidates;
    if (trial_division_is_prime(x)) {
      candidates.push_back(x);
    } else {
      std::uint64_t lo = x - 1;
      while (!trial_division_is_prime(lo)) --lo;
      std::uint64_t hi = x + 1;
      while (!trial_division_is_prime(hi)) ++hi;
      if (hi - x < x - lo) {
        candidates = {hi, lo};
      } else {
        candidates = {lo, hi};
      }
    }
    for (std::uint64_t p : candidates) {
      if (p <= q) continue;
      ++rank;
      if (below(p, q, t, epsilon)) return OracleAnswer{PrimePair(p, q), pair_error(p, q, t), rank};
    }
  }
  return std::nullopt;
}

std::optional<OracleAnswer> replay_direct_order(const Rational& t, const Rational& epsilon,
                                                std::uint64_t n0, std::uint64_t n_cap) {
  require_t(t);
  if (epsilon.sign() <= 0) throw DomainError("oracle: epsilon must be positive");
  std::vector<std::uint64_t> bounds;
  for (std::uint64_t n = n0; n <= n_cap; n *= 2) bounds.push_back(n);
  if (bounds.empty() || bounds.back() != n_cap) bounds.push_back(n_cap);

  for (std::uint64_t bound : bounds) {
    const auto primes = primes_by_trial_division(bound);
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      for (std::size_t j = i + 1; j < primes.size(); ++j) {
        ++rank;
        if (below(primes[j], primes[i], t, epsilon))
          return OracleAnswer{PrimePair(primes[j], primes[i]), pair_error(primes[j], primes[i], t),
                              rank};
      }
    }
  }
  return std::nullopt;
}

std::vector<Rational> brute_force_SN(std::uint64_t N) {
  std::set<Rational> values;
  const auto primes = primes_by_trial_division(N);
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j)
      values.insert(Rational(z(primes[j]) - z(primes[i]), z(primes[j]) + z(primes[i])));
  return {values.begin(), values.end()};
}

Rational brute_force_max_gap(std::uint64_t N, const Rational& a, const Rational& b) {
  Rational previous = a;
  Rational widest;
  for (const auto& v : brute_force_SN(N)) {
    if (v < a || v > b) continue;
    if (v - previous > widest) widest = v - previous;
    previous = v;
  }
  if (b - previous > widest) widest = b - previous;
  return widest;
}

}  // namespace primepair::oracle
