// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "primepair/cli.hpp"
#include "primepair/density.hpp"
#include "primepair/oracle.hpp"
#include "primepair/primality.hpp"
#include "primepair/ratio.hpp"
#include "primepair/sieve.hpp"
#include "primepair/strategies.hpp"

#ifndef PRIMEPAIR_CLI_PATH
#error "PRIMEPAIR_CLI_PATH must be defined"
#endif

using namespace primepair;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int run(int id, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome outcome;
  const auto start = Clock::now();
  try {
    body(outcome);
  } catch (const std::exception& e) {
    outcome.pass = false;
    outcome.detail << " [exception: " << e.what() << "]";
  }
  std::printf("[%s] %2d %s (%.2fs)%s\n", outcome.pass ? "PASS" : "FAIL", id, title, seconds_since(start),
              outcome.detail.str().c_str());
  std::fflush(stdout);
  return outcome.pass ? 0 : 1;
}

std::string capture(const std::string& args) {
  const std::string command = std::string(PRIMEPAIR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot run " + command);
  std::string out;
  std::array<char, 4096> buffer{};
  for (std::size_t n; (n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0;) out.append(buffer.data(), n);
  ::pclose(pipe);
  return out;
}

void example_one_endpoint(Outcome& o) {
  const auto err = approx_error(PrimePair(59, 29), Rational(1, 3));
  o.expect(err == Rational(1, 132), "error == 1/132, got " + err.str());
  o.expect(err < Rational(1, 100), "1/132 < 1/100");
  o.expect(err.fixed(3) == "0.008", "rounds to 0.008, got " + err.fixed(3));
}

void example_two_trace(Outcome& o) {
  struct Row {
    std::uint64_t p, q;
    Rational value, error;
    const char* value_printed;
    const char* error_printed;
  };
  const std::vector<Row> rows = {
      {13, 11, Rational(1, 12), Rational(1, 60), "0.0833", "0.0167"},
      {53, 41, Rational(6, 47), Rational(13, 470), "0.1277", "0.0277"},
      {73, 61, Rational(6, 67), Rational(7, 670), "0.0896", "0.0104"},
      {89, 71, Rational(9, 80), Rational(1, 80), "0.1125", "0.0125"},
      {127, 101, Rational(13, 114), Rational(4, 285), "0.1140", "0.0140"},
      {181, 151, Rational(15, 166), Rational(4, 415), "0.0904", "0.0096"},
  };
  const Rational t(1, 10);
  for (const auto& row : rows) {
    const PrimePair pair(row.p, row.q);
    const auto label = to_string(pair);
    o.expect(rho(pair) == row.value, label + " value " + rho(pair).str());
    o.expect(approx_error(pair, t) == row.error, label + " error " + approx_error(pair, t).str());
    o.expect(row.value.fixed(4) == row.value_printed, label + " value decimal");
    o.expect(row.error.fixed(4) == row.error_printed, label + " error decimal");
    const bool last = row.p == 181;
    o.expect((row.error < Rational(1, 100)) == last, label + " verdict against 1/100");
  }
}

void certification_grid(Outcome& o) {
  const auto start = Clock::now();
  int ok = 0;
  for (int k = 1; k <= 99; ++k) {
    ApproxQuery q{Rational(k, 100), Rational(1, 1000)};
    try {
      const auto r = approximate(q);
      const bool certified = approx_error(r.pair, q.t) == r.error && r.error < q.epsilon;
      o.expect(certified, "t = " + q.t.str() + " not certified");
      ok += certified ? 1 : 0;
    } catch (const SearchCapExceeded&) {
      o.expect(false, "t = " + q.t.str() + " hit its caps");
    }
  }
  const double elapsed = seconds_since(start);
  o.expect(elapsed < 60.0, "runtime under 60 s");
  o.detail << " " << ok << "/99 certified";
}

void oracle_conformance(Outcome& o) {
  auto targeted = fixtures::searches("targeted");
  auto direct = fixtures::searches("direct");
  targeted.resize(20);
  direct.resize(20);
  int agreed = 0;
  for (const auto& f : targeted) {
    const auto t = Rational::parse(f.t), eps = Rational::parse(f.epsilon);
    ApproxQuery q{t, eps, SearchMode::targeted};
    q.q_start = f.a;
    q.q_cap = f.b;
    const auto expected = oracle::replay_targeted_order(t, eps, f.a, f.b);
    const auto got = targeted_search(q);
    const bool same = expected && expected->pair == got.pair && got.pair == PrimePair(*f.p, *f.q);
    o.expect(same, "targeted " + f.t + " " + f.epsilon);
    agreed += same;
  }
  for (const auto& f : direct) {
    const auto t = Rational::parse(f.t), eps = Rational::parse(f.epsilon);
    ApproxQuery q{t, eps, SearchMode::direct};
    q.direct_n0 = f.a;
    q.direct_n_cap = f.b;
    const auto expected = oracle::replay_direct_order(t, eps, f.a, f.b);
    const auto got = direct_search(q);
    const bool same = expected && expected->pair == got.pair && got.pair == PrimePair(*f.p, *f.q);
    o.expect(same, "direct " + f.t + " " + f.epsilon);
    agreed += same;
  }
  o.detail << " " << agreed << "/40 pairs equal";
}

void prerequisite_scans(Outcome& o) {
  const auto bertrand = bertrand_scan(100'000);
  o.expect(!bertrand, "Bertrand counterexample at n = " + std::to_string(bertrand.value_or(0)));
  const auto pi = pi_lower_bound_scan(1'000'000);
  o.expect(!pi, "pi(x) bound fails at x = " + std::to_string(pi.value_or(0)));
  o.expect(check_pi_lower_bound(25) && check_pi_lower_bound(1'000'000), "pointwise checks at the ends");
}

void primality_cross_check(Outcome& o) {
  const auto table = primes_up_to(1'000'000);
  std::uint64_t discrepancies = 0;
  std::size_t next = 0;
  const auto primes = table.primes();
  for (std::uint64_t n = 0; n <= 1'000'000; ++n) {
    const bool sieve_says = next < primes.size() && primes[next] == n;
    if (sieve_says) ++next;
    discrepancies += is_prime(n) != sieve_says;
  }
  o.expect(discrepancies == 0, std::to_string(discrepancies) + " discrepancies");
  o.detail << " " << primes.size() << " primes, " << discrepancies << " discrepancies";
}

void density_fixture(Outcome& o) {
  std::string frozen;
  for (const auto& line : fixtures::of_kind("max_gap"))
    if (line.fields[0] == "1000" && line.fields[1] == "1/20" && line.fields[2] == "19/20") frozen = line.fields[3];
  o.expect(!frozen.empty(), "fixture present");
  const auto report = density_report(1000, Rational::parse("0.05"), Rational::parse("0.95"));
  o.expect(report.max_gap_in_window.str() == frozen, "max gap " + report.max_gap_in_window.str() + " == " + frozen);
  o.expect(report.max_gap_in_window < Rational(1, 100), "max gap below 1/100");
  o.detail << " max_gap = " << report.max_gap_in_window.str() << " ~ " << report.max_gap_in_window.decimal(4);
}

void complexity_probe_trend(Outcome& o) {
  const auto start = Clock::now();
  std::vector<Rational> t_grid;
  for (int k = 1; k <= 9; ++k) t_grid.emplace_back(k, 10);
  const std::vector<Rational> eps_grid{Rational(1, 100), Rational(1, 1000), Rational(1, 10000)};
  const auto rows = complexity_probe(t_grid, eps_grid);
  std::uint64_t ok = 0;
  for (const auto& row : rows) ok += row.ok;
  const auto mono = count_monotone_steps(rows);
  // Nine t values times three epsilons give 18 adjacent comparisons; the
  // allowance of 27 - 24 = 3 non-monotone steps is kept.
  const std::uint64_t violations = mono.comparisons - mono.nondecreasing;
  o.expect(rows.size() == 27, "27 rows");
  o.expect(ok >= 25, "at least 25 ok rows");
  o.expect(violations <= 3, "at most 3 decreasing steps");
  o.expect(seconds_since(start) < 300.0, "runtime under 5 minutes");
  o.detail << " " << ok << "/27 ok, " << mono.nondecreasing << "/" << mono.comparisons << " steps nondecreasing";
}

void identity_property(Outcome& o) {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<std::uint64_t> magnitude(2, 1ull << 62);
  std::uniform_int_distribution<long> den(2, 1L << 40);
  std::uint64_t failures = 0;
  for (int i = 0; i < 10'000; ++i) {
    std::uint64_t a = next_prime(magnitude(rng) >> (rng() % 60));
    std::uint64_t b = next_prime(magnitude(rng) >> (rng() % 60));
    if (a == b) b = next_prime(b);
    const PrimePair pair(std::max(a, b), std::min(a, b));
    const long d = den(rng);
    std::uniform_int_distribution<long> num(1, d - 1);
    const Rational t(num(rng), d);
    failures += error_identity_residual(pair, t) != Rational(0);
  }
  o.expect(failures == 0, std::to_string(failures) + " nonzero residuals");
  o.detail << " 10000 cases, " << failures << " failures";
}

void cli_determinism(Outcome& o) {
  const std::vector<std::string> commands = {
      "approximate 1/3 0.01",
      "approximate 0.1 0.01 --q-start 151",
      "approximate 1.5 0.01",
      "density 5 --window 1/5 3/7",
      "density 1000 --window 0.05 0.95",
      "checks 100000 1000000",
      "verify-paper-examples",
      "probe 0.1:0.9:0.1 1e-2,1e-3,1e-4",
      "probe 0.5 0.5",
      "primes 1000 --list",
  };
  for (const auto& args : commands) {
    const std::string first = capture(args + " --format object");
    const std::string second = capture(args + " --format object");
    o.expect(!first.empty() && first == second, "'" + args + "' output differs between runs");
    try {
      cli::validate_envelope(cli::json::parse(first));
    } catch (const std::exception& e) {
      o.expect(false, "'" + args + "' envelope: " + e.what());
    }
    const std::string table_a = capture(args + " --format table");
    o.expect(table_a == capture(args + " --format table"), "'" + args + "' table differs between runs");
  }
  o.detail << " " << commands.size() << " commands x 2 formats";
}

}  // namespace

int main() {
  int failures = 0;
  failures += run(1, "Example 1 endpoint error 1/132 < 1/100, prints as 0.008", example_one_endpoint);
  failures += run(2, "Example 2 trace values and errors reproduce every printed decimal", example_two_trace);
  failures += run(3, "approximate() certified for t = k/100, eps = 1e-3, under 60 s", certification_grid);
  failures += run(4, "oracle conformance on 20 targeted + 20 direct fixtures", oracle_conformance);
  failures += run(5, "Bertrand scan to 1e5, pi(x) >= x/(2 ln x) on [25, 1e6]", prerequisite_scans);
  failures += run(6, "is_prime agrees with the sieve for n <= 1e6", primality_cross_check);
  failures += run(7, "density_report(1000, [0.05, 0.95]) max gap equals frozen value < 1e-2", density_fixture);
  failures += run(8, "27-row complexity probe: >= 25 ok, trend nondecreasing", complexity_probe_trend);
  failures += run(9, "error identity residual zero on 1e4 random cases", identity_property);
  failures += run(10, "byte-identical CLI output across consecutive runs", cli_determinism);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
