#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace primepair {

/// Exact arbitrary-precision fraction, always kept in canonical form:
/// positive denominator and gcd(|num|, den) = 1. Equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: integers convert implicitly
  Rational(int value) : value_(value) {}   // NOLINT
  Rational(const mpz_class& value) : value_(value) {}  // NOLINT

  /// Throws DomainError when den == 0.
  Rational(const mpz_class& num, const mpz_class& den);

  static Rational from_u64(std::uint64_t value);
  static Rational from_u64(std::uint64_t num, std::uint64_t den);

  /// Accepts "a/b", "-a/b", "12", "0.01", ".5", "1e-3", "2.5E+2".
  /// Throws DomainError naming the input on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  mpz_class floor() const;
  /// Nearest integer, halves rounded toward +infinity.
  mpz_class round_half_up() const;

  double to_double() const { return value_.get_d(); }

  /// Canonical "num/den" form; integers render as "n/1".
  std::string str() const;

  /// Decimal rendering rounded (half up in magnitude) to `significant` digits,
  /// trailing zeros trimmed. Plain notation for moderate exponents, otherwise
  /// scientific ("1.5e-07").
  std::string decimal(int significant = 12) const;

  /// Rounded to a fixed number of places after the point, zero padded.
  std::string fixed(int places) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// 10^exponent as an exact integer.
mpz_class pow10(unsigned long exponent);

}  // namespace primepair
