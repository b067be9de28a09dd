#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace primepair {

/// Argument outside the mathematical domain of an operation (t outside (0,1),
/// x < 25 for the pi(x) check, malformed numeric strings, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A 64-bit search would wrap around.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Sieve workspace estimate exceeds the configured memory budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t requested_bytes, std::uint64_t budget_bytes)
      : std::runtime_error("sieve workspace of " + std::to_string(requested_bytes) +
                           " bytes exceeds the configured budget of " +
                           std::to_string(budget_bytes) + " bytes"),
        requested_(requested_bytes),
        budget_(budget_bytes) {}

  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t requested_;
  std::uint64_t budget_;
};

/// A configured work cap was hit. Search strategies throw a subclass that
/// also carries the best answer seen so far.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace primepair
