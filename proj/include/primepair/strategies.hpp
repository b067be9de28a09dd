#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "primepair/errors.hpp"
#include "primepair/ratio.hpp"
#include "primepair/rational.hpp"

namespace primepair {

enum class SearchMode { targeted, direct, automatic };
enum class ReturnPolicy { first, best_within_cap };
enum class Strategy { targeted, direct };

std::string_view to_string(SearchMode mode);
std::string_view to_string(ReturnPolicy policy);
std::string_view to_string(Strategy strategy);

/// Accepts "targeted" | "direct" | "auto".
SearchMode parse_search_mode(std::string_view text);
/// Accepts "first" | "best".
ReturnPolicy parse_return_policy(std::string_view text);

struct ApproxQuery {
  Rational t;
  Rational epsilon;
  SearchMode mode = SearchMode::automatic;
  std::uint64_t q_start = 2;
  std::uint64_t q_cap = 100'000'000;
  std::uint64_t direct_n0 = 100;
  std::uint64_t direct_n_cap = 1'000'000;
  ReturnPolicy policy = ReturnPolicy::first;

  /// Throws DomainError naming the first violated constraint.
  void validate() const;
};

struct ApproxResult {
  PrimePair pair;
  Rational value;  // rho(pair)
  Rational error;  // |rho(pair) - t|
  Strategy strategy_used;
  std::uint64_t candidates_examined = 0;
  std::uint64_t max_prime_touched = 0;

  friend bool operator==(const ApproxResult&, const ApproxResult&) = default;
};

/// No pair with error < epsilon inside the configured caps. Carries the
/// closest pair seen, with telemetry covering all the work done.
class SearchCapExceeded : public CapExceeded {
 public:
  SearchCapExceeded(const std::string& what, std::optional<ApproxResult> best,
                    std::uint64_t candidates_examined, std::uint64_t max_prime_touched)
      : CapExceeded(what),
        best_(std::move(best)),
        candidates_examined_(candidates_examined),
        max_prime_touched_(max_prime_touched) {}

  const std::optional<ApproxResult>& best() const noexcept { return best_; }
  std::uint64_t candidates_examined() const noexcept { return candidates_examined_; }
  std::uint64_t max_prime_touched() const noexcept { return max_prime_touched_; }

 private:
  std::optional<ApproxResult> best_;
  std::uint64_t candidates_examined_;
  std::uint64_t max_prime_touched_;
};

/// Primes q ascending from q_start up to q_cap; for each, the neighbours of
/// round-half-up(q r), r = (1+t)/(1-t), in nearest_primes order, skipping
/// candidates <= q. `first` stops at the first error < epsilon;
/// `best_within_cap` scans every q up to q_cap and keeps the minimum.
ApproxResult targeted_search(const ApproxQuery& query);

/// Exhaustive pair scan in doubling stages N = n0, 2 n0, ... (the last stage
/// clamped to n_cap). Stage N visits only pairs with p in (N/2, N] after the
/// first, in (q, p) lexicographic order. `best_within_cap` returns the
/// minimum-error pair with p <= n_cap.
ApproxResult direct_search(const ApproxQuery& query);

/// Dispatch on query.mode. Automatic runs targeted first and falls back to
/// direct on SearchCapExceeded; telemetry is summed (candidates) and maxed
/// (primes) across both phases.
ApproxResult approximate(const ApproxQuery& query);

}  // namespace primepair
