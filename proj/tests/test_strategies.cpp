#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "primepair/oracle.hpp"
#include "primepair/ratio.hpp"
#include "primepair/sieve.hpp"
#include "primepair/strategies.hpp"

using namespace primepair;

namespace {

ApproxQuery query(const char* t, const char* eps) { return ApproxQuery{Rational::parse(t), Rational::parse(eps)}; }

}  // namespace

TEST_CASE("targeted search canonical order") {
  auto q = query("1/3", "1/100");
  auto r = targeted_search(q);
  CHECK(r.pair == PrimePair(47, 23));
  CHECK(r.error == Rational(1, 105));
  CHECK(r.strategy_used == Strategy::targeted);

  q.q_start = 29;
  r = targeted_search(q);
  CHECK(r.pair == PrimePair(59, 29));
  CHECK(r.error == Rational(1, 132));

  auto q2 = query("1/10", "1/100");
  q2.q_start = 151;
  r = targeted_search(q2);
  CHECK(r.pair == PrimePair(181, 151));
  CHECK(r.error == Rational(4, 415));

  // q_start need not be prime.
  q2.q_start = 150;
  CHECK(targeted_search(q2).pair == PrimePair(181, 151));
}

TEST_CASE("direct search examples") {
  auto q = query("1/3", "1/10");
  q.direct_n_cap = 1000;
  auto r = direct_search(q);
  CHECK(r.pair == PrimePair(5, 2));
  CHECK(r.error == Rational(2, 21));

  auto half = query("1/2", "1/2");
  r = direct_search(half);
  CHECK(r.pair == PrimePair(3, 2));
  CHECK(r.candidates_examined == 1);

  auto tiny = query("1/1000", "1/1000000");
  tiny.direct_n_cap = 1000;
  try {
    direct_search(tiny);
    FAIL("expected SearchCapExceeded");
  } catch (const SearchCapExceeded& e) {
    REQUIRE(e.best().has_value());
    const auto oracle_best = oracle::best_pair_up_to(1000, tiny.t);
    CHECK(e.best()->pair == oracle_best.pair);
    CHECK(e.best()->error == oracle_best.error);
    CHECK_FALSE(e.best()->error < tiny.epsilon);
  }
}

TEST_CASE("approximate") {
  auto r = approximate(query("1/3", "1/100"));
  CHECK(r.pair == PrimePair(47, 23));
  CHECK(r.strategy_used == Strategy::targeted);

  r = approximate(query("1/10", "1/100"));
  CHECK(r.pair == PrimePair(23, 19));
  CHECK(r.error == Rational(1, 210));

  r = approximate(query("999/1000", "1/1000"));
  CHECK(r.error < Rational(1, 1000));

  auto forced = query("1/3", "1/100");
  forced.mode = SearchMode::direct;
  CHECK(approximate(forced).strategy_used == Strategy::direct);
}

TEST_CASE("automatic mode falls back to direct search and sums telemetry") {
  auto q = query("1/3", "1/100");
  q.q_cap = 20;  // targeted order needs q = 23
  const auto r = approximate(q);
  CHECK(r.strategy_used == Strategy::direct);
  CHECK(r.pair == PrimePair(47, 23));
  // 16 targeted candidates for q <= 19, then rank 170 in the direct order.
  CHECK(r.candidates_examined == 16 + 170);
  // The q = 2 row of the direct order already runs through p = 97.
  CHECK(r.max_prime_touched == 97);

  q.direct_n0 = 10;
  q.direct_n_cap = 30;
  try {
    approximate(q);
    FAIL("expected SearchCapExceeded");
  } catch (const SearchCapExceeded& e) {
    CHECK(e.candidates_examined() == 16 + 45);  // C(pi(30), 2) = 45
    CHECK(e.max_prime_touched() == 41);
    REQUIRE(e.best());
    CHECK(e.best()->error < Rational(1, 50));
  }
}

TEST_CASE("targeted cap exceeded carries the best pair") {
  auto q = query("1/1000", "1/1000000000");
  q.mode = SearchMode::targeted;
  q.q_cap = 1000;
  try {
    targeted_search(q);
    FAIL("expected SearchCapExceeded");
  } catch (const SearchCapExceeded& e) {
    REQUIRE(e.best());
    CHECK(e.best()->error >= q.epsilon);
    CHECK(e.best()->pair.q() <= 1000);
    CHECK(e.candidates_examined() > 0);
  }
}

TEST_CASE("query validation") {
  auto q = query("1/3", "1/100");
  q.q_start = 1;
  CHECK_THROWS_AS(targeted_search(q), DomainError);
  q = query("1/3", "0");
  CHECK_THROWS_AS(approximate(q), DomainError);
  q = query("1", "1/100");
  CHECK_THROWS_AS(approximate(q), DomainError);
  q = query("1/3", "1/100");
  q.direct_n0 = 4;
  CHECK_THROWS_AS(direct_search(q), DomainError);
  q = query("1/3", "1/100");
  q.direct_n_cap = 50;
  CHECK_THROWS_AS(direct_search(q), DomainError);
  q = query("1/3", "1/100");
  q.q_cap = 1;
  CHECK_THROWS_AS(targeted_search(q), DomainError);
  CHECK_THROWS_AS(parse_search_mode("fast"), DomainError);
  CHECK_THROWS_AS(parse_return_policy("all"), DomainError);
}

TEST_CASE("targeted search agrees with the frozen oracle replay") {
  const auto rows = fixtures::searches("targeted");
  REQUIRE(rows.size() >= 20);
  for (const auto& f : rows) {
    CAPTURE(f.t);
    CAPTURE(f.epsilon);
    auto q = query(f.t.c_str(), f.epsilon.c_str());
    q.q_start = f.a;
    q.q_cap = f.b;
    q.mode = SearchMode::targeted;
    REQUIRE(f.p.has_value());
    const auto r = targeted_search(q);
    CHECK(r.pair == PrimePair(*f.p, *f.q));
    CHECK(r.error == Rational::parse(f.error));
    CHECK(r.candidates_examined == f.rank);
  }
}

TEST_CASE("direct search agrees with the frozen lexicographic oracle") {
  const auto rows = fixtures::searches("direct");
  REQUIRE(rows.size() >= 20);
  for (const auto& f : rows) {
    CAPTURE(f.t);
    CAPTURE(f.epsilon);
    auto q = query(f.t.c_str(), f.epsilon.c_str());
    q.direct_n0 = f.a;
    q.direct_n_cap = f.b;
    if (!f.p) {
      CHECK_THROWS_AS(direct_search(q), SearchCapExceeded);
      continue;
    }
    const auto r = direct_search(q);
    CHECK(r.pair == PrimePair(*f.p, *f.q));
    CHECK(r.error == Rational::parse(f.error));
  }
}

TEST_CASE("property: direct search follows the brute-force order on random queries") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(1, 999);
  std::uniform_int_distribution<long> eps_den(50, 20000);
  std::uniform_int_distribution<std::uint64_t> n0(5, 60);
  for (int i = 0; i < 20; ++i) {
    ApproxQuery q{Rational(num(rng), 1000), Rational(1, eps_den(rng))};
    q.direct_n0 = n0(rng);
    q.direct_n_cap = q.direct_n0 * 24 + 7;
    CAPTURE(q.t);
    CAPTURE(q.epsilon);
    const auto expected = oracle::replay_direct_order(q.t, q.epsilon, q.direct_n0, q.direct_n_cap);
    if (expected) {
      const auto r = direct_search(q);
      CHECK(r.pair == expected->pair);
      CHECK(r.error == expected->error);
    } else {
      CHECK_THROWS_AS(direct_search(q), SearchCapExceeded);
    }
  }
}

TEST_CASE("property: targeted search follows the naive replay on random queries") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> num(1, 9999);
  std::uniform_int_distribution<long> eps_den(50, 50000);
  std::uniform_int_distribution<std::uint64_t> start(2, 500);
  for (int i = 0; i < 40; ++i) {
    ApproxQuery q{Rational(num(rng), 10000), Rational(1, eps_den(rng))};
    q.q_start = start(rng);
    q.q_cap = q.q_start + 3000;
    q.mode = SearchMode::targeted;
    CAPTURE(q.t);
    CAPTURE(q.epsilon);
    const auto expected = oracle::replay_targeted_order(q.t, q.epsilon, q.q_start, q.q_cap);
    if (expected) {
      const auto r = targeted_search(q);
      CHECK(r.pair == expected->pair);
      CHECK(r.candidates_examined == expected->rank_in_order);
    } else {
      CHECK_THROWS_AS(targeted_search(q), SearchCapExceeded);
    }
  }
}

TEST_CASE("best_within_cap direct search equals the exhaustive minimizer") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> num(1, 99999);
  for (std::uint64_t n : {10u, 100u, 1000u}) {
    for (int i = 0; i < 8; ++i) {
      ApproxQuery q{Rational(num(rng), 100000), Rational(1)};
      q.direct_n0 = 5;
      q.direct_n_cap = n;
      q.policy = ReturnPolicy::best_within_cap;
      CAPTURE(q.t);
      const auto expected = oracle::best_pair_up_to(n, q.t);
      const auto r = direct_search(q);
      CHECK(r.pair == expected.pair);
      CHECK(r.error == expected.error);
    }
  }
  // Exact hit: t = 1/4 is attained by (5, 3).
  ApproxQuery q{Rational(1, 4), Rational(1, 1000000)};
  q.direct_n_cap = 1000;
  q.policy = ReturnPolicy::best_within_cap;
  CHECK(direct_search(q).pair == PrimePair(5, 3));
}

TEST_CASE("best_within_cap targeted search improves on first") {
  auto q = query("1/3", "1/100");
  q.mode = SearchMode::targeted;
  q.q_cap = 500;
  const auto first = targeted_search(q);
  q.policy = ReturnPolicy::best_within_cap;
  const auto best = targeted_search(q);
  CHECK(best.error <= first.error);
  CHECK(best.error < q.epsilon);
  CHECK(best.max_prime_touched >= first.max_prime_touched);
}

TEST_CASE("direct stages never revisit a pair") {
  auto q = query("1/1000", "1/1000000000");
  q.direct_n0 = 10;
  q.direct_n_cap = 1000;  // stages 10, 20, ..., 640, 1000
  try {
    direct_search(q);
    FAIL("expected SearchCapExceeded");
  } catch (const SearchCapExceeded& e) {
    const std::uint64_t pi = prime_count(1000);
    CHECK(e.candidates_examined() == pi * (pi - 1) / 2);
  }
}

TEST_CASE("certification, ratio-form bound and determinism over a grid") {
  for (int k = 1; k < 100; k += 7) {
    for (const char* eps : {"1/100", "1/1000", "1/10000"}) {
      ApproxQuery q{Rational(k, 100), Rational::parse(eps)};
      const auto a = approximate(q);
      const auto b = approximate(q);
      CHECK(a == b);
      CHECK(a.error < q.epsilon);
      CHECK(a.error == approx_error(a.pair, q.t));
      CHECK(a.value == rho(a.pair));
      CHECK(error_identity_residual(a.pair, q.t) == Rational(0));
      // |p - q r| <= (eps / 3) q r implies error < eps.
      const Rational r = target_ratio(q.t);
      const Rational qr = Rational::from_u64(a.pair.q()) * r;
      const Rational offset = (Rational::from_u64(a.pair.p()) - qr).abs();
      if (offset <= q.epsilon / Rational(3) * qr) CHECK(a.error < q.epsilon);
      CHECK(a.error == Rational(2) * offset / (Rational::from_u64(a.pair.p() + a.pair.q()) * (r + Rational(1))));
    }
  }
}
