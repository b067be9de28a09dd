#pragma once

// Brute-force reference answers for the search strategies and the S_N
// survey. Everything here uses trial division, linear neighbour scans and
// integer cross-multiplication; nothing calls into the search code it is
// meant to check.

#include <cstdint>
#include <optional>
#include <vector>

#include "primepair/ratio.hpp"
#include "primepair/rational.hpp"

namespace primepair::oracle {

inline constexpr std::uint64_t kMaxOracleN = 10'000;

struct OracleAnswer {
  PrimePair pair;
  Rational error;
  /// 1-based position of `pair` in the enumeration order that produced it.
  std::uint64_t rank_in_order;
};

bool trial_division_is_prime(std::uint64_t n);

/// |(p - q)/(p + q) - t| from integers, returned as num/den.
Rational pair_error(std::uint64_t p, std::uint64_t q, const Rational& t);

/// Minimum-error pair over all primes q < p <= N; ties go to the smaller
/// p + q, then the smaller p. Requires 5 <= N <= kMaxOracleN, 0 < t < 1.
OracleAnswer best_pair_up_to(std::uint64_t N, const Rational& t);

/// Naive replay of the targeted order: primes q in [q_start, q_stop]
/// ascending, x = round-half-up(q (1+t)/(1-t)), candidates x itself if prime
/// else its two neighbouring primes by distance (ties smaller first),
/// candidates <= q skipped. First candidate with error < epsilon wins.
std::optional<OracleAnswer> replay_targeted_order(const Rational& t, const Rational& epsilon,
                                                  std::uint64_t q_start, std::uint64_t q_stop);

/// Naive replay of the direct order. For each bound N in n0, 2 n0, 4 n0, ...
/// (clamped to a final n_cap) every pair with p <= N is enumerated from
/// scratch in lexicographic (q, then p) order; the first stage containing a
/// hit returns its first hit.
std::optional<OracleAnswer> replay_direct_order(const Rational& t, const Rational& epsilon,
                                                std::uint64_t n0, std::uint64_t n_cap);

/// All distinct (p - q)/(p + q) for primes q < p <= N, ascending.
std::vector<Rational> brute_force_SN(std::uint64_t N);

/// Largest gap of brute_force_SN(N) inside [a, b], counting a -> first and
/// last -> b.
Rational brute_force_max_gap(std::uint64_t N, const Rational& a, const Rational& b);

}  // namespace primepair::oracle
