#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace primepair {

struct SieveConfig {
  /// Upper bound on the workspace a PrimeTable may need.
  std::uint64_t memory_budget_bytes = std::uint64_t{1} << 31;
  /// Numbers sieved per segment (one byte each).
  std::uint64_t segment_span = std::uint64_t{1} << 15;
};

/// Environment variable holding a byte count that overrides the default budget.
inline constexpr const char* kSieveBudgetEnv = "PRIMEPAIR_SIEVE_BUDGET";

/// Defaults, with memory_budget_bytes taken from PRIMEPAIR_SIEVE_BUDGET when
/// set. Throws DomainError if the variable is not a positive integer.
SieveConfig sieve_config_from_env();

/// Every prime in [2, limit], ascending.
class PrimeTable {
 public:
  PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> primes)
      : limit_(limit), primes_(std::move(primes)) {}

  std::uint64_t limit() const noexcept { return limit_; }
  std::span<const std::uint64_t> primes() const noexcept { return primes_; }
  std::size_t size() const noexcept { return primes_.size(); }

  /// Binary search; n must not exceed limit().
  bool contains(std::uint64_t n) const;
  /// Number of primes <= x for x <= limit().
  std::uint64_t count_up_to(std::uint64_t x) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> primes_;
};

/// Workspace estimate used for the budget check: storage for an upper bound
/// on pi(limit) plus the base primes and one segment.
std::uint64_t estimated_table_bytes(std::uint64_t limit, const SieveConfig& config = {});

/// Segmented sieve over [lo, hi]; calls visit(p) for each prime in ascending
/// order.
void for_each_prime(std::uint64_t lo, std::uint64_t hi, const std::function<void(std::uint64_t)>& visit,
                    const SieveConfig& config = {});

/// Throws DomainError if limit < 2, BudgetExceeded if the estimate is above
/// config.memory_budget_bytes.
PrimeTable primes_up_to(std::uint64_t limit, const SieveConfig& config = sieve_config_from_env());

/// pi(x), exact; counts without storing the primes.
std::uint64_t prime_count(std::uint64_t x);

/// pi(x) >= x / (2 ln x), decided conservatively: the left side is shrunk by
/// a relative 1e-12 before comparing, so rounding can only produce a false
/// "no". Throws DomainError if x < 25.
bool check_pi_lower_bound(std::uint64_t x);

/// Same inequality given pi(x) directly.
bool pi_lower_bound_holds(std::uint64_t x, std::uint64_t pi_x);

/// Smallest x in [25, x_max] where the pi(x) bound fails, or empty.
std::optional<std::uint64_t> pi_lower_bound_scan(std::uint64_t x_max);

/// Smallest n in [2, n_max] with no prime strictly inside (n, 2n), or empty.
/// Throws DomainError if n_max < 2.
std::optional<std::uint64_t> bertrand_scan(std::uint64_t n_max);

}  // namespace primepair
