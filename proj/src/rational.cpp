#include "primepair/rational.hpp"

#include <cctype>
#include <cstdio>
#include <ostream>

#include "primepair/errors.hpp"

namespace primepair {

namespace {

mpz_class from_u64_z(std::uint64_t value) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
  return z;
}

[[noreturn]] void bad_number(std::string_view text, const char* why) {
  throw DomainError("cannot parse '" + std::string(text) + "' as a rational: " + why);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// floor(log10(a)) for a > 0.
long decimal_exponent(const mpz_class& num, const mpz_class& den) {
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  // sizeinbase may overshoot by one; settle e so that 10^e <= num/den < 10^(e+1).
  auto ge_pow = [&](long k) {
    if (k >= 0) return num >= den * pow10(static_cast<unsigned long>(k));
    return num * pow10(static_cast<unsigned long>(-k)) >= den;
  };
  while (!ge_pow(e)) --e;
  while (ge_pow(e + 1)) ++e;
  return e;
}

}  // namespace

mpz_class pow10(unsigned long exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::from_u64(std::uint64_t value) { return Rational(from_u64_z(value)); }

Rational Rational::from_u64(std::uint64_t num, std::uint64_t den) {
  return Rational(from_u64_z(num), from_u64_z(den));
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad_number(text, "empty");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto n = s.substr(0, slash);
    auto d = s.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) bad_number(text, "expected digits around '/'");
    mpz_class den(std::string(d), 10);
    if (den == 0) bad_number(text, "zero denominator");
    out = Rational(mpz_class(std::string(n), 10), den);
  } else {
    std::string_view mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = s.substr(0, e);
      auto exp_text = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) bad_number(text, "bad exponent");
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
    }
    std::string digits;
    long fraction_digits = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      auto whole = mantissa.substr(0, dot);
      auto frac = mantissa.substr(dot + 1);
      if (whole.empty() && frac.empty()) bad_number(text, "no digits");
      if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
        bad_number(text, "unexpected character");
      digits = std::string(whole) + std::string(frac);
      fraction_digits = static_cast<long>(frac.size());
    } else {
      if (!all_digits(mantissa)) bad_number(text, "unexpected character");
      digits = std::string(mantissa);
    }
    exponent -= fraction_digits;
    mpz_class n(digits, 10);
    if (exponent >= 0)
      out = Rational(mpz_class(n * pow10(static_cast<unsigned long>(exponent))));
    else
      out = Rational(n, pow10(static_cast<unsigned long>(-exponent)));
  }
  return negative ? -out : out;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

mpz_class Rational::round_half_up() const { return (*this + Rational(1, 2)).floor(); }

std::string Rational::str() const { return value_.get_num().get_str() + "/" + value_.get_den().get_str(); }

std::string Rational::decimal(int significant) const {
  if (significant < 1) significant = 1;
  if (sign() == 0) return "0";
  const mpz_class num = ::abs(value_.get_num());
  const mpz_class& den = value_.get_den();

  long e = decimal_exponent(num, den);
  long shift = significant - 1 - e;
  mpz_class scaled_num = num;
  mpz_class scaled_den = den;
  if (shift >= 0)
    scaled_num *= pow10(static_cast<unsigned long>(shift));
  else
    scaled_den *= pow10(static_cast<unsigned long>(-shift));
  mpz_class scaled = Rational(scaled_num, scaled_den).round_half_up();
  if (scaled == pow10(static_cast<unsigned long>(significant))) {
    scaled /= 10;
    ++e;
  }
  std::string digits = scaled.get_str();
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

  std::string out = sign() < 0 ? "-" : "";
  if (e >= -7 && e < 16) {
    if (e >= 0) {
      auto whole_len = static_cast<std::size_t>(e + 1);
      if (digits.size() <= whole_len) {
        out += digits + std::string(whole_len - digits.size(), '0');
      } else {
        out += digits.substr(0, whole_len) + "." + digits.substr(whole_len);
      }
    } else {
      out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
    }
  } else {
    out += digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "e%c%02ld", e < 0 ? '-' : '+', e < 0 ? -e : e);
    out += buf;
  }
  return out;
}

std::string Rational::fixed(int places) const {
  if (places < 0) places = 0;
  const auto scale = pow10(static_cast<unsigned long>(places));
  mpz_class scaled = (abs() * Rational(scale)).round_half_up();
  std::string digits = scaled.get_str();
  if (digits.size() <= static_cast<std::size_t>(places))
    digits = std::string(static_cast<std::size_t>(places) + 1 - digits.size(), '0') + digits;
  std::string out = (sign() < 0 && scaled != 0) ? "-" : "";
  auto split = digits.size() - static_cast<std::size_t>(places);
  out += digits.substr(0, split);
  if (places > 0) out += "." + digits.substr(split);
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.sign() == 0) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace primepair
