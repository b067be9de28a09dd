#include "primepair/ratio.hpp"

#include "primepair/errors.hpp"
#include "primepair/primality.hpp"

namespace primepair {

PrimePair::PrimePair(std::uint64_t p, std::uint64_t q) : p_(p), q_(q) {
  if (p <= q)
    throw DomainError("prime pair requires p > q, got (" + std::to_string(p) + ", " +
                      std::to_string(q) + ")");
  if (!is_prime(q)) throw DomainError("q = " + std::to_string(q) + " is not prime");
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
}

std::string to_string(const PrimePair& pair) {
  return "(" + std::to_string(pair.p()) + ", " + std::to_string(pair.q()) + ")";
}

void require_unit_interval(const Rational& t, const char* what) {
  if (t.sign() <= 0 || t >= Rational(1))
    throw DomainError(std::string(what) + " must lie in the open interval (0, 1), got " + t.str());
}

Rational rho(const PrimePair& pair) {
  // p + q can reach 2^65; go through mpz before adding.
  const auto p = Rational::from_u64(pair.p());
  const auto q = Rational::from_u64(pair.q());
  return (p - q) / (p + q);
}

Rational target_ratio(const Rational& t) {
  require_unit_interval(t);
  return (Rational(1) + t) / (Rational(1) - t);
}

Rational ratio_to_t(const Rational& r) {
  if (r <= Rational(1)) throw DomainError("target ratio must exceed 1, got " + r.str());
  return (r - Rational(1)) / (r + Rational(1));
}

Rational approx_error(const PrimePair& pair, const Rational& t) {
  require_unit_interval(t);
  return (rho(pair) - t).abs();
}

Rational signed_error_via_ratio(const PrimePair& pair, const Rational& t) {
  const Rational r = target_ratio(t);
  const auto p = Rational::from_u64(pair.p());
  const auto q = Rational::from_u64(pair.q());
  return Rational(2) * (p - q * r) / ((p + q) * (r + Rational(1)));
}

Rational error_identity_residual(const PrimePair& pair, const Rational& t) {
  require_unit_interval(t);
  return (rho(pair) - t) - signed_error_via_ratio(pair, t);
}

bool hits_exactly(const PrimePair& pair, const Rational& t) {
  require_unit_interval(t);
  const mpz_class num = t.num();
  const mpz_class den = t.den();
  const mpz_class p = Rational::from_u64(pair.p()).num();
  const mpz_class q = Rational::from_u64(pair.q()).num();
  return p * (den - num) == q * (den + num);
}

}  // namespace primepair
