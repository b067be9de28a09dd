#include "primepair/primality.hpp"

#include <array>
#include <string>

#include "primepair/errors.hpp"

namespace primepair {

namespace {

using u128 = unsigned __int128;

constexpr std::array<std::uint32_t, 25> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                                        29, 31, 37, 41, 43, 47, 53, 59, 61,
                                                        67, 71, 73, 79, 83, 89, 97};

constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// n odd, n > witness.
bool strong_probable_prime(std::uint64_t n, std::uint64_t witness, std::uint64_t d, int s) {
  std::uint64_t x = pow_mod(witness, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint32_t p : kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 97ull * 97ull) return true;

  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kWitnesses)
    if (!strong_probable_prime(n, a, d, s)) return false;
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  if (n >= kLargestPrime64)
    throw OverflowError("no 64-bit prime exceeds " + std::to_string(n));
  if (n < 2) return 2;
  std::uint64_t candidate = (n + 1) | 1;  // odd, > n
  while (!is_prime(candidate)) candidate += 2;
  return candidate;
}

std::optional<std::uint64_t> prev_prime(std::uint64_t n) {
  if (n <= 2) return std::nullopt;
  if (n == 3) return 2;
  std::uint64_t candidate = (n - 1) | 1;
  if (candidate >= n) candidate -= 2;
  while (!is_prime(candidate)) candidate -= 2;
  return candidate;
}

std::vector<std::uint64_t> nearest_primes(std::uint64_t x) {
  if (x < 2) throw DomainError("nearest_primes requires x >= 2, got " + std::to_string(x));
  if (is_prime(x)) return {x};
  // x composite and >= 4, so a smaller prime exists.
  const std::uint64_t below = *prev_prime(x);
  const std::uint64_t above = next_prime(x);
  if (above - x < x - below) return {above, below};
  return {below, above};
}

}  // namespace primepair
