#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace primepair {

/// Deterministic for every 64-bit input: trial division by the primes below
/// 100, then strong-probable-prime tests to the first twelve prime bases
/// (sufficient for all n < 3.3 * 10^24). 0 and 1 are not prime.
bool is_prime(std::uint64_t n);

/// Smallest prime strictly greater than n. Throws OverflowError when that
/// prime would not fit in 64 bits.
std::uint64_t next_prime(std::uint64_t n);

/// Largest prime strictly less than n; empty when n <= 2.
std::optional<std::uint64_t> prev_prime(std::uint64_t n);

/// [x] if x is prime, otherwise its two neighbouring primes ordered by
/// distance from x (ties go to the smaller prime). Requires x >= 2.
std::vector<std::uint64_t> nearest_primes(std::uint64_t x);

/// Largest prime below 2^64.
inline constexpr std::uint64_t kLargestPrime64 = 18446744073709551557ull;

}  // namespace primepair
