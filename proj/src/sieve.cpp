#include "primepair/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "primepair/errors.hpp"

namespace primepair {

namespace {

constexpr double kLogMargin = 1e-12;

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

std::vector<std::uint32_t> base_primes(std::uint64_t limit) {
  std::vector<char> composite(limit + 1, 0);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return out;
}

// Rosser-Schoenfeld: pi(x) < 1.25506 x / ln x for x > 1.
std::uint64_t pi_upper_estimate(std::uint64_t x) {
  if (x < 17) return x;
  const double xd = static_cast<double>(x);
  return static_cast<std::uint64_t>(std::ceil(1.25506 * xd / std::log(xd))) + 1;
}

}  // namespace

SieveConfig sieve_config_from_env() {
  SieveConfig config;
  if (const char* raw = std::getenv(kSieveBudgetEnv); raw != nullptr && *raw != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || value == 0)
      throw DomainError(std::string(kSieveBudgetEnv) + " must be a positive byte count, got '" + raw + "'");
    config.memory_budget_bytes = value;
  }
  return config;
}

bool PrimeTable::contains(std::uint64_t n) const { return std::binary_search(primes_.begin(), primes_.end(), n); }

std::uint64_t PrimeTable::count_up_to(std::uint64_t x) const {
  return static_cast<std::uint64_t>(std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

std::uint64_t estimated_table_bytes(std::uint64_t limit, const SieveConfig& config) {
  const std::uint64_t storage = pi_upper_estimate(limit) * sizeof(std::uint64_t);
  const std::uint64_t base = (isqrt(limit) + 1) + pi_upper_estimate(isqrt(limit)) * sizeof(std::uint32_t);
  return storage + base + std::min(config.segment_span, limit + 1);
}

void for_each_prime(std::uint64_t lo, std::uint64_t hi, const std::function<void(std::uint64_t)>& visit,
                    const SieveConfig& config) {
  if (lo < 2) lo = 2;
  if (hi < lo) return;
  const auto base = base_primes(isqrt(hi));
  const std::uint64_t span =
      std::min(std::max<std::uint64_t>(config.segment_span, 64), hi - lo == UINT64_MAX ? hi : hi - lo + 1);
  std::vector<char> composite(span);

  for (std::uint64_t seg_lo = lo;;) {
    const std::uint64_t seg_hi = (hi - seg_lo < span - 1) ? hi : seg_lo + span - 1;
    const std::uint64_t width = seg_hi - seg_lo + 1;
    std::fill(composite.begin(), composite.begin() + static_cast<std::ptrdiff_t>(width), 0);
    for (std::uint64_t p : base) {
      if (p > seg_hi / p) break;
      std::uint64_t start = std::max(p * p, (seg_lo + p - 1) / p * p);
      for (std::uint64_t m = start; m <= seg_hi; m += p) {
        composite[m - seg_lo] = 1;
        if (m > std::numeric_limits<std::uint64_t>::max() - p) break;
      }
    }
    for (std::uint64_t i = 0; i < width; ++i)
      if (!composite[i]) visit(seg_lo + i);
    if (seg_hi == hi) break;
    seg_lo = seg_hi + 1;
  }
}

PrimeTable primes_up_to(std::uint64_t limit, const SieveConfig& config) {
  if (limit < 2) throw DomainError("primes_up_to requires limit >= 2, got " + std::to_string(limit));
  const std::uint64_t needed = estimated_table_bytes(limit, config);
  if (needed > config.memory_budget_bytes) throw BudgetExceeded(needed, config.memory_budget_bytes);

  std::vector<std::uint64_t> primes;
  primes.reserve(pi_upper_estimate(limit));
  for_each_prime(2, limit, [&](std::uint64_t p) { primes.push_back(p); }, config);
  return PrimeTable(limit, std::move(primes));
}

std::uint64_t prime_count(std::uint64_t x) {
  std::uint64_t count = 0;
  for_each_prime(2, x, [&](std::uint64_t) { ++count; });
  return count;
}

bool pi_lower_bound_holds(std::uint64_t x, std::uint64_t pi_x) {
  const double xd = static_cast<double>(x);
  const double lhs = 2.0 * static_cast<double>(pi_x) * std::log(xd);
  return lhs * (1.0 - kLogMargin) >= xd;
}

bool check_pi_lower_bound(std::uint64_t x) {
  if (x < 25) throw DomainError("the pi(x) lower bound is stated for x >= 25, got " + std::to_string(x));
  return pi_lower_bound_holds(x, prime_count(x));
}

std::optional<std::uint64_t> pi_lower_bound_scan(std::uint64_t x_max) {
  if (x_max < 25) throw DomainError("pi(x) scan requires x_max >= 25, got " + std::to_string(x_max));
  std::uint64_t pi = 0;
  std::uint64_t x = 25;
  std::optional<std::uint64_t> failure;
  // Walk x upward; between consecutive primes pi(x) is constant.
  for_each_prime(2, x_max, [&](std::uint64_t p) {
    if (failure) return;
    for (; x < p && x <= x_max; ++x)
      if (!pi_lower_bound_holds(x, pi)) {
        failure = x;
        return;
      }
    ++pi;
  });
  for (; !failure && x <= x_max; ++x)
    if (!pi_lower_bound_holds(x, pi)) failure = x;
  return failure;
}

std::optional<std::uint64_t> bertrand_scan(std::uint64_t n_max) {
  if (n_max < 2) throw DomainError("bertrand_scan requires n_max >= 2, got " + std::to_string(n_max));
  if (n_max > std::numeric_limits<std::uint64_t>::max() / 2) throw OverflowError("bertrand_scan bound too large");
  const auto table = primes_up_to(2 * n_max);
  const auto primes = table.primes();
  std::size_t next = 0;  // index of the smallest prime > n
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    while (next < primes.size() && primes[next] <= n) ++next;
    if (next == primes.size() || primes[next] >= 2 * n) return n;
  }
  return std::nullopt;
}

}  // namespace primepair
