#include "worked_examples.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primepair/primality.hpp"
#include "primepair/ratio.hpp"
#include "primepair/rational.hpp"
#include "primepair/strategies.hpp"

namespace primepair::cli {

namespace {

using json = nlohmann::ordered_json;

struct Step {
  std::uint64_t q;
  const char* target;          // printed q r
  bool target_called_composite;
  std::uint64_t p = 0;         // 0: no candidate printed for this q
  const char* fraction = "";   // printed exact value, when given
  const char* value = "";
  const char* error = "";
  bool called_below = false;   // printed verdict "< epsilon"
};

struct Trace {
  const char* name;
  const char* t;
  const char* t_printed;
  const char* epsilon;
  const char* ratio_printed;
  std::vector<Step> steps;
};

const std::vector<Trace>& traces() {
  static const std::vector<Trace> kTraces = {
      {"example-1", "1/3", "0.333", "0.01", "2",
       {
           {2, "4", true},
           {3, "6", true},
           {5, "10", true},
           {7, "14", true},
           {11, "22", true},
           {13, "26", true},
           {17, "34", true, 37, "10/27", "0.370", "0.037", false},
           {29, "58", false, 59, "15/44", "0.341", "0.008", true},
       }},
      {"example-2", "0.1", "0.100", "0.01", "1.222",
       {
           {11, "13.44", false, 13, "1/12", "0.0833", "0.0167", false},
           {41, "50.1", false, 53, "6/47", "0.1277", "0.0277", false},
           {61, "74.5", false, 73, "6/67", "0.0896", "0.0104", false},
           {71, "86.8", false, 89, "9/80", "0.1125", "0.0125", false},
           {101, "123.4", false, 127, "13/114", "0.1140", "0.0140", false},
           {151, "184.5", false, 181, "15/166", "0.0904", "0.0096", true},
       }},
  };
  return kTraces;
}

int places(std::string_view printed) {
  const auto dot = printed.find('.');
  return dot == std::string_view::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
}

bool matches(const Rational& exact, std::string_view printed) { return exact.fixed(places(printed)) == printed; }

json exact_json(const Rational& v) { return {{"exact", v.str()}, {"decimal", v.decimal()}}; }

json verify_trace(const Trace& trace, bool& all_match) {
  const Rational t = Rational::parse(trace.t);
  const Rational epsilon = Rational::parse(trace.epsilon);
  const Rational r = target_ratio(t);
  const Rational rounded_r = Rational::parse(trace.ratio_printed);

  json steps = json::array();
  json notes = json::array();

  const bool t_match = matches(t, trace.t_printed);
  const bool r_match = matches(r, trace.ratio_printed);
  all_match = all_match && t_match && r_match;

  for (const auto& step : trace.steps) {
    const Rational target = Rational::from_u64(step.q) * r;
    json row;
    row["q"] = step.q;
    row["target"] = exact_json(target);
    row["target_printed"] = step.target;
    const bool target_match = matches(target, step.target);
    // Printed targets that only agree with the ratio rounded as printed.
    const bool target_via_rounded_ratio = matches(Rational::from_u64(step.q) * rounded_r, step.target);
    row["target_match"] = target_match;
    row["target_matches_rounded_ratio"] = target_via_rounded_ratio;
    all_match = all_match && (target_match || target_via_rounded_ratio);
    if (!target_match && target_via_rounded_ratio)
      notes.push_back("q = " + std::to_string(step.q) + ": printed target " + step.target +
                      " is q times the rounded ratio " + trace.ratio_printed + "; exact q r = " + target.decimal(6));

    if (step.target_called_composite) {
      const bool composite = target.is_integer() && !is_prime(target.num().get_ui());
      row["target_composite"] = composite;
      all_match = all_match && composite;
    }

    const auto x = target.round_half_up().get_ui();
    json canonical = json::array();
    for (auto c : nearest_primes(x))
      if (c > step.q) canonical.push_back(c);
    row["canonical_candidates"] = canonical;

    if (step.p != 0) {
      const PrimePair pair(step.p, step.q);
      const Rational value = rho(pair);
      const Rational error = approx_error(pair, t);
      const bool below = error < epsilon;
      const bool fraction_match = value == Rational::parse(step.fraction);
      const bool value_match = matches(value, step.value);
      const bool error_match = matches(error, step.error);
      const bool verdict_match = below == step.called_below;
      row["p"] = step.p;
      row["value"] = exact_json(value);
      row["fraction_printed"] = step.fraction;
      row["fraction_match"] = fraction_match;
      row["value_printed"] = step.value;
      row["value_match"] = value_match;
      row["error"] = exact_json(error);
      row["error_printed"] = step.error;
      row["error_match"] = error_match;
      row["below_epsilon"] = below;
      row["verdict_match"] = verdict_match;
      all_match = all_match && fraction_match && value_match && error_match && verdict_match;
      if (canonical.empty() || canonical.front() != step.p)
        notes.push_back("q = " + std::to_string(step.q) + ": printed candidate " + std::to_string(step.p) +
                        " is not the first nearest-prime candidate " +
                        (canonical.empty() ? std::string("(none)") : canonical.front().dump()));
    }
    steps.push_back(std::move(row));
  }

  // Primes q skipped between the first and last printed q.
  json skipped = json::array();
  for (std::size_t i = 1; i < trace.steps.size(); ++i)
    for (auto q = next_prime(trace.steps[i - 1].q); q < trace.steps[i].q; q = next_prime(q)) skipped.push_back(q);
  if (!skipped.empty()) notes.push_back("primes q not shown in the trace: " + skipped.dump());

  ApproxQuery from_two{t, epsilon};
  from_two.mode = SearchMode::targeted;
  ApproxQuery from_last = from_two;
  from_last.q_start = trace.steps.back().q;
  const auto first_hit = targeted_search(from_two);
  const auto endpoint = targeted_search(from_last);
  const auto& last = trace.steps.back();
  const bool endpoint_reproduced = endpoint.pair == PrimePair(last.p, last.q);
  all_match = all_match && endpoint_reproduced;

  json out;
  out["name"] = trace.name;
  out["t"] = exact_json(t);
  out["t_printed"] = trace.t_printed;
  out["t_match"] = t_match;
  out["epsilon"] = exact_json(epsilon);
  out["ratio"] = exact_json(r);
  out["ratio_printed"] = trace.ratio_printed;
  out["ratio_match"] = r_match;
  out["steps"] = std::move(steps);
  out["skipped_q"] = std::move(skipped);
  out["canonical_first_hit"] = {{"p", first_hit.pair.p()}, {"q", first_hit.pair.q()}, {"error", exact_json(first_hit.error)}};
  out["endpoint_from_last_q"] = {{"q_start", last.q}, {"p", endpoint.pair.p()}, {"q", endpoint.pair.q()},
                                 {"error", exact_json(endpoint.error)}, {"reproduced", endpoint_reproduced}};
  out["notes"] = std::move(notes);
  return out;
}

}  // namespace

json verify_worked_examples() {
  bool all_match = true;
  json examples = json::array();
  for (const auto& trace : traces()) examples.push_back(verify_trace(trace, all_match));
  json out;
  out["all_match"] = all_match;
  out["examples"] = std::move(examples);
  return out;
}

}  // namespace primepair::cli
