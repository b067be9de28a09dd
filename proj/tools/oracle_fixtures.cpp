// Emits the frozen oracle table checked in under tests/fixtures/.
//
//   oracle_fixtures > tests/fixtures/oracle_fixtures.txt

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "primepair/oracle.hpp"

namespace {

using primepair::Rational;
namespace oracle = primepair::oracle;

struct SearchFixture {
  const char* t;
  const char* epsilon;
};

// (t, epsilon) pairs shared by the targeted and direct conformance rows.
const std::vector<SearchFixture> kSearchFixtures = {
    {"1/3", "1/100"},  {"1/10", "1/100"}, {"1/2", "1/100"},   {"0.123", "1/1000"},
    {"2/3", "1/100"},  {"3/4", "1/500"},  {"9/10", "1/100"},  {"0.618", "1/2000"},
    {"0.271828", "1/1000"},  {"3/5", "1/50"},   {"4/5", "1/1000"},  {"7/10", "1/100"},
    {"0.314159", "1/5000"}, {"1/7", "1/100"},  {"5/7", "1/1000"},  {"1/20", "1/100"},
    {"19/20", "1/100"}, {"11/13", "1/250"}, {"1/100", "1/1000"}, {"99/100", "1/1000"},
};

constexpr std::uint64_t kTargetedQStop = 100'000;
constexpr std::uint64_t kDirectN0 = 100;
constexpr std::uint64_t kDirectNCap = 3'200;

void emit(const std::string& kind, const std::string& params, const oracle::OracleAnswer& a) {
  std::cout << kind << ' ' << params << ' ' << a.pair.p() << ' ' << a.pair.q() << ' '
            << a.error.str() << ' ' << a.rank_in_order << '\n';
}

void emit_none(const std::string& kind, const std::string& params) {
  std::cout << kind << ' ' << params << " none\n";
}

}  // namespace

int main() {
  std::cout << "# kind params... -> p q error rank (or 'none')\n";
  std::cout << "# targeted t epsilon q_start q_stop\n";
  for (const auto& f : kSearchFixtures) {
    const std::string params = std::string(f.t) + ' ' + f.epsilon + " 2 " + std::to_string(kTargetedQStop);
    auto a = oracle::replay_targeted_order(Rational::parse(f.t), Rational::parse(f.epsilon), 2,
                                           kTargetedQStop);
    a ? emit("targeted", params, *a) : emit_none("targeted", params);
  }
  for (auto [t, eps, q_start, q_stop] : std::vector<std::tuple<const char*, const char*, int, int>>{
           {"1/3", "1/100", 29, 100}, {"1/10", "1/100", 151, 200}}) {
    const std::string params = std::string(t) + ' ' + eps + ' ' + std::to_string(q_start) + ' ' +
                               std::to_string(q_stop);
    auto a = oracle::replay_targeted_order(Rational::parse(t), Rational::parse(eps),
                                           static_cast<std::uint64_t>(q_start),
                                           static_cast<std::uint64_t>(q_stop));
    a ? emit("targeted", params, *a) : emit_none("targeted", params);
  }

  std::cout << "# direct t epsilon n0 n_cap\n";
  for (const auto& f : kSearchFixtures) {
    const std::string params = std::string(f.t) + ' ' + f.epsilon + ' ' + std::to_string(kDirectN0) +
                               ' ' + std::to_string(kDirectNCap);
    auto a = oracle::replay_direct_order(Rational::parse(f.t), Rational::parse(f.epsilon), kDirectN0,
                                         kDirectNCap);
    a ? emit("direct", params, *a) : emit_none("direct", params);
  }
  for (auto [t, eps, n0, ncap] : std::vector<std::tuple<const char*, const char*, int, int>>{
           {"1/3", "1/10", 100, 1000}, {"1/2", "1/2", 100, 1000}, {"1/1000", "1/1000000", 100, 1000}}) {
    const std::string params =
        std::string(t) + ' ' + eps + ' ' + std::to_string(n0) + ' ' + std::to_string(ncap);
    auto a = oracle::replay_direct_order(Rational::parse(t), Rational::parse(eps),
                                         static_cast<std::uint64_t>(n0), static_cast<std::uint64_t>(ncap));
    a ? emit("direct", params, *a) : emit_none("direct", params);
  }

  std::cout << "# best N t\n";
  for (auto [n, t] : std::vector<std::pair<int, const char*>>{
           {7, "1/4"}, {10, "99/100"}, {100, "1/3"}, {1000, "1/1000"}, {1000, "1/10"}}) {
    emit("best", std::to_string(n) + ' ' + t, oracle::best_pair_up_to(static_cast<std::uint64_t>(n), Rational::parse(t)));
  }

  std::cout << "# sn N -> distinct_count min max\n";
  for (int n : {5, 7, 100, 1000}) {
    const auto values = oracle::brute_force_SN(static_cast<std::uint64_t>(n));
    std::cout << "sn " << n << ' ' << values.size() << ' ' << values.front().str() << ' '
              << values.back().str() << '\n';
  }

  std::cout << "# max_gap N a b -> gap\n";
  for (auto [n, a, b] : std::vector<std::tuple<int, const char*, const char*>>{
           {5, "1/5", "3/7"}, {100, "1/10", "9/10"}, {1000, "1/20", "19/20"}}) {
    std::cout << "max_gap " << n << ' ' << a << ' ' << b << ' '
              << oracle::brute_force_max_gap(static_cast<std::uint64_t>(n), Rational::parse(a), Rational::parse(b)).str()
              << '\n';
  }
  return 0;
}
