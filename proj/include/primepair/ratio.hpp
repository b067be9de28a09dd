#pragma once

#include <cstdint>
#include <string>

#include "primepair/rational.hpp"

namespace primepair {

/// Two primes p > q >= 2. Construction is the only place the primality of a
/// pair is checked; every PrimePair in the system is valid.
class PrimePair {
 public:
  /// Throws DomainError unless p > q and both are prime.
  PrimePair(std::uint64_t p, std::uint64_t q);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t q() const noexcept { return q_; }

  friend bool operator==(const PrimePair&, const PrimePair&) = default;

 private:
  std::uint64_t p_;
  std::uint64_t q_;
};

std::string to_string(const PrimePair& pair);

/// Normalized difference (p - q) / (p + q), always in (0, 1).
Rational rho(const PrimePair& pair);

/// r = (1 + t) / (1 - t); the prime ratio p / q that hits t exactly.
/// Throws DomainError unless 0 < t < 1.
Rational target_ratio(const Rational& t);

/// Inverse of target_ratio: (r - 1) / (r + 1). Throws DomainError unless r > 1.
Rational ratio_to_t(const Rational& r);

/// |rho(pair) - t|, exact. Throws DomainError unless 0 < t < 1.
Rational approx_error(const PrimePair& pair, const Rational& t);

/// Signed rho(pair) - t computed through the ratio form
/// 2 (p - q r) / ((p + q)(r + 1)), r = target_ratio(t).
Rational signed_error_via_ratio(const PrimePair& pair, const Rational& t);

/// (rho(pair) - t) minus the ratio form above. Always zero; kept as an
/// executable check of the algebra.
Rational error_identity_residual(const PrimePair& pair, const Rational& t);

/// True iff rho(pair) == t, decided by integer cross-multiplication
/// p (den - num) == q (den + num) for t = num/den.
bool hits_exactly(const PrimePair& pair, const Rational& t);

/// Throws DomainError unless 0 < t < 1; `what` names the argument.
void require_unit_interval(const Rational& t, const char* what = "t");

}  // namespace primepair
