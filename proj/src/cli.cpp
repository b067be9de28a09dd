#include "primepair/cli.hpp"

#include <cstdio>
#include <functional>
#include <sstream>

#include "primepair/density.hpp"
#include "primepair/errors.hpp"
#include "primepair/ratio.hpp"
#include "primepair/sieve.hpp"
#include "worked_examples.hpp"

#ifndef PRIMEPAIR_VERSION
#define PRIMEPAIR_VERSION "0.0.0"
#endif

namespace primepair::cli {

namespace {

const std::vector<std::string> kEnvelopeKeys = {"command", "version", "status", "message",
                                                "parameters", "result", "telemetry"};

Envelope make_envelope(std::string command, json parameters) {
  Envelope e;
  e.command = std::move(command);
  e.version = PRIMEPAIR_VERSION;
  e.status = kStatusOk;
  e.parameters = std::move(parameters);
  return e;
}

// Runs `body`, mapping the library's error types onto envelope statuses.
Envelope guarded(std::string command, json parameters, const std::function<void(Envelope&)>& body) {
  Envelope e = make_envelope(std::move(command), std::move(parameters));
  try {
    body(e);
  } catch (const DomainError& err) {
    e.status = kStatusError;
    e.message = err.what();
    e.result = nullptr;
  } catch (const OverflowError& err) {
    e.status = kStatusError;
    e.message = err.what();
    e.result = nullptr;
  } catch (const BudgetExceeded& err) {
    e.status = kStatusCapExceeded;
    e.message = err.what();
    e.result = nullptr;
  } catch (const CapExceeded& err) {
    e.status = kStatusCapExceeded;
    e.message = err.what();
    if (e.result.is_null()) e.result = nullptr;
  }
  return e;
}

Rational parse_argument(std::string_view text, const char* name) {
  try {
    return Rational::parse(text);
  } catch (const DomainError& err) {
    throw DomainError(std::string("argument ") + name + ": " + err.what());
  }
}

json result_json(const ApproxResult& r) {
  json out;
  out["p"] = r.pair.p();
  out["q"] = r.pair.q();
  out["value"] = rational_json(r.value);
  out["error"] = rational_json(r.error);
  out["strategy"] = std::string(to_string(r.strategy_used));
  return out;
}

ApproxQuery make_query(const Rational& t, const Rational& eps, const SearchOptions& options) {
  ApproxQuery q{t, eps};
  q.mode = parse_search_mode(options.mode);
  q.q_start = options.q_start;
  q.q_cap = options.q_cap;
  q.direct_n0 = options.n0;
  q.direct_n_cap = options.n_cap;
  q.policy = parse_return_policy(options.policy);
  q.validate();
  return q;
}

json options_json(const SearchOptions& o) {
  return {{"mode", o.mode},   {"q_start", o.q_start}, {"q_cap", o.q_cap},
          {"n0", o.n0},       {"n_cap", o.n_cap},     {"policy", o.policy}};
}

std::string csv_field(const json& v) {
  std::string text;
  if (v.is_null()) return "";
  if (v.is_string()) {
    text = v.get<std::string>();
  } else if (v.is_object() && v.contains("exact")) {
    text = v["exact"].get<std::string>();
  } else {
    text = v.dump();
  }
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void csv_row(std::ostringstream& out, const std::vector<json>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
  out << '\n';
}

void csv_header(std::ostringstream& out, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
  out << '\n';
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

json decimal_of(const json& rational) { return rational.is_null() ? json() : rational["decimal"]; }

std::string render_table(const Envelope& e) {
  std::ostringstream out;
  const json& r = e.result;
  if (r.is_null() || (e.status == kStatusError)) {
    csv_header(out, {"command", "status", "message"});
    csv_row(out, {e.command, e.status, e.message});
    return out.str();
  }
  if (e.command == "approximate") {
    const json& hit = r.contains("best") ? r["best"] : r;
    csv_header(out, {"status", "p", "q", "value", "value_decimal", "error", "error_decimal", "strategy",
                     "candidates_examined", "max_prime_touched"});
    if (hit.is_null()) {
      csv_row(out, {e.status, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr,
                    e.telemetry["candidates_examined"], e.telemetry["max_prime_touched"]});
    } else {
      csv_row(out, {e.status, hit["p"], hit["q"], hit["value"], decimal_of(hit["value"]), hit["error"],
                    decimal_of(hit["error"]), hit["strategy"], e.telemetry["candidates_examined"],
                    e.telemetry["max_prime_touched"]});
    }
  } else if (e.command == "density") {
    csv_header(out, {"N", "pair_count", "distinct_count", "window_a", "window_b", "in_window_count", "max_gap",
                     "max_gap_decimal", "avg_spacing", "avg_spacing_decimal", "heuristic_avg_spacing"});
    csv_row(out, {r["N"], r["pair_count"], r["distinct_count"], r["window_a"], r["window_b"], r["in_window_count"],
                  r["max_gap_in_window"], decimal_of(r["max_gap_in_window"]), r["avg_spacing"],
                  decimal_of(r["avg_spacing"]), r["heuristic_avg_spacing"]});
  } else if (e.command == "checks") {
    csv_header(out, {"check", "from", "to", "holds", "first_failure"});
    csv_row(out, {"bertrand", r["bertrand"]["from"], r["bertrand"]["to"], r["bertrand"]["holds"],
                  r["bertrand"]["first_failure"]});
    csv_row(out, {"pi_lower_bound", r["pi_lower_bound"]["from"], r["pi_lower_bound"]["to"],
                  r["pi_lower_bound"]["holds"], r["pi_lower_bound"]["first_failure"]});
  } else if (e.command == "verify-paper-examples") {
    csv_header(out, {"example", "q", "target", "target_printed", "target_match", "target_matches_rounded_ratio",
                     "p", "value", "value_printed", "value_match", "error", "error_printed", "error_match",
                     "below_epsilon", "verdict_match"});
    for (const auto& ex : r["examples"]) {
      for (const auto& s : ex["steps"]) {
        auto get = [&](const char* k) { return s.contains(k) ? s[k] : json(); };
        csv_row(out, {ex["name"], s["q"], s["target"], s["target_printed"], s["target_match"],
                      s["target_matches_rounded_ratio"], get("p"), get("value"), get("value_printed"),
                      get("value_match"), get("error"), get("error_printed"), get("error_match"),
                      get("below_epsilon"), get("verdict_match")});
      }
    }
  } else if (e.command == "probe") {
    csv_header(out, {"t", "epsilon", "status", "p", "q", "error", "strategy", "max_prime_touched",
                     "candidates_examined"});
    for (const auto& row : r["rows"])
      csv_row(out, {row["t"], row["epsilon"], row["status"], row["p"], row["q"], row["error"], row["strategy"],
                    row["max_prime_touched"], row["candidates_examined"]});
  } else if (e.command == "primes") {
    csv_header(out, {"limit", "count"});
    csv_row(out, {r["limit"], r["count"]});
    if (r.contains("primes")) {
      csv_header(out, {"index", "prime"});
      std::size_t i = 0;
      for (const auto& p : r["primes"]) csv_row(out, {++i, p});
    }
  }
  return out.str();
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "table") return OutputFormat::table;
  if (text == "object") return OutputFormat::object;
  throw DomainError("unknown format '" + std::string(text) + "' (expected table or object)");
}

json rational_json(const Rational& value) { return {{"exact", value.str()}, {"decimal", value.decimal()}}; }

json to_json(const Envelope& e) {
  json out;
  out["command"] = e.command;
  out["version"] = e.version;
  out["status"] = e.status;
  out["message"] = e.message;
  out["parameters"] = e.parameters;
  out["result"] = e.result;
  out["telemetry"] = e.telemetry;
  return out;
}

void validate_envelope(const json& object) {
  if (!object.is_object()) throw DomainError("envelope must be a JSON object");
  if (object.size() != kEnvelopeKeys.size()) throw DomainError("envelope must have exactly 7 keys");
  std::size_t i = 0;
  for (const auto& [key, value] : object.items()) {
    if (key != kEnvelopeKeys[i++]) throw DomainError("unexpected envelope key '" + key + "'");
  }
  for (const char* k : {"command", "version", "status", "message"})
    if (!object[k].is_string()) throw DomainError(std::string("envelope field '") + k + "' must be a string");
  const auto status = object["status"].get<std::string>();
  if (status != kStatusOk && status != kStatusCapExceeded && status != kStatusError)
    throw DomainError("unknown envelope status '" + status + "'");
  if (!object["parameters"].is_object()) throw DomainError("envelope parameters must be an object");
  if (!object["telemetry"].is_object()) throw DomainError("envelope telemetry must be an object");
  if (!object["result"].is_null() && !object["result"].is_object())
    throw DomainError("envelope result must be an object or null");
}

Envelope envelope_from_json(const json& object) {
  validate_envelope(object);
  Envelope e;
  e.command = object["command"].get<std::string>();
  e.version = object["version"].get<std::string>();
  e.status = object["status"].get<std::string>();
  e.message = object["message"].get<std::string>();
  e.parameters = object["parameters"];
  e.result = object["result"];
  e.telemetry = object["telemetry"];
  return e;
}

int exit_code(const Envelope& e) {
  if (e.status == kStatusOk) return 0;
  if (e.status == kStatusCapExceeded) return 2;
  return 1;
}

std::string render(const Envelope& e, OutputFormat format) {
  if (format == OutputFormat::object) return to_json(e).dump(2) + "\n";
  return render_table(e);
}

std::vector<Rational> parse_grid(std::string_view spec) {
  std::vector<Rational> out;
  if (spec.find(':') != std::string_view::npos) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t pos; (pos = spec.find(':', start)) != std::string_view::npos; start = pos + 1)
      parts.push_back(spec.substr(start, pos - start));
    parts.push_back(spec.substr(start));
    if (parts.size() != 3) throw DomainError("range grid must look like a:b:step, got '" + std::string(spec) + "'");
    const Rational from = parse_argument(parts[0], "grid start");
    const Rational to = parse_argument(parts[1], "grid end");
    const Rational step = parse_argument(parts[2], "grid step");
    if (step.sign() <= 0) throw DomainError("grid step must be positive");
    if (to < from) throw DomainError("grid end precedes grid start");
    for (Rational v = from; v <= to; v += step) {
      out.push_back(v);
      if (out.size() > 100'000) throw DomainError("grid has more than 100000 points");
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= spec.size()) {
    const auto pos = spec.find(',', start);
    const auto item = spec.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
    out.push_back(parse_argument(item, "grid item"));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Envelope cmd_approximate(std::string_view t_text, std::string_view eps_text, const SearchOptions& options) {
  json params = {{"t", t_text}, {"epsilon", eps_text}};
  params.update(options_json(options));
  return guarded("approximate", std::move(params), [&](Envelope& e) {
    const ApproxQuery query = make_query(parse_argument(t_text, "t"), parse_argument(eps_text, "epsilon"), options);
    e.parameters["t_exact"] = query.t.str();
    e.parameters["epsilon_exact"] = query.epsilon.str();
    try {
      const ApproxResult r = approximate(query);
      e.result = result_json(r);
      e.telemetry = {{"candidates_examined", r.candidates_examined}, {"max_prime_touched", r.max_prime_touched}};
    } catch (const SearchCapExceeded& err) {
      e.status = kStatusCapExceeded;
      e.message = err.what();
      e.result = {{"best", err.best() ? result_json(*err.best()) : json()}};
      e.telemetry = {{"candidates_examined", err.candidates_examined()},
                     {"max_prime_touched", err.max_prime_touched()}};
    }
  });
}

Envelope cmd_density(std::uint64_t N, std::string_view a_text, std::string_view b_text) {
  return guarded("density", {{"N", N}, {"window_a", a_text}, {"window_b", b_text}}, [&](Envelope& e) {
    const auto report = density_report(N, parse_argument(a_text, "window a"), parse_argument(b_text, "window b"));
    e.result = {{"N", report.N},
                {"pair_count", report.pair_count},
                {"distinct_count", report.distinct_count},
                {"window_a", rational_json(report.window_a)},
                {"window_b", rational_json(report.window_b)},
                {"in_window_count", report.in_window_count},
                {"max_gap_in_window", rational_json(report.max_gap_in_window)},
                {"avg_spacing", rational_json(report.avg_spacing)},
                {"heuristic_avg_spacing", format_double(report.heuristic_avg_spacing)}};
    e.telemetry = {{"pairs_enumerated", report.pair_count}};
  });
}

Envelope cmd_checks(std::uint64_t n_max, std::uint64_t x_max) {
  return guarded("checks", {{"n_max_bertrand", n_max}, {"x_max_pi", x_max}}, [&](Envelope& e) {
    if (n_max < 2) throw DomainError("Bertrand scan bound must be at least 2, got " + std::to_string(n_max));
    if (x_max < 25) throw DomainError("pi(x) scan bound must be at least 25, got " + std::to_string(x_max));
    if (n_max > kChecksCap || x_max > kChecksCap)
      throw CapExceeded("check bounds are capped at " + std::to_string(kChecksCap));
    const auto bertrand = bertrand_scan(n_max);
    const auto pi = pi_lower_bound_scan(x_max);
    e.result = {{"bertrand", {{"from", 2}, {"to", n_max}, {"holds", !bertrand}, {"first_failure", bertrand ? json(*bertrand) : json()}}},
                {"pi_lower_bound", {{"from", 25}, {"to", x_max}, {"holds", !pi}, {"first_failure", pi ? json(*pi) : json()}}}};
    e.telemetry = {{"integers_checked", (n_max - 1) + (x_max - 24)}};
    if (bertrand || pi) {
      e.status = kStatusError;
      e.message = "counterexample found";
    }
  });
}

Envelope cmd_verify_paper_examples() {
  return guarded("verify-paper-examples", json::object(), [&](Envelope& e) {
    e.result = verify_worked_examples();
    std::uint64_t steps = 0;
    for (const auto& ex : e.result["examples"]) steps += ex["steps"].size();
    e.telemetry = {{"steps_checked", steps}};
    if (!e.result["all_match"].get<bool>()) {
      e.status = kStatusError;
      e.message = "a printed value does not match its exact re-derivation";
    }
  });
}

Envelope cmd_probe(std::string_view t_spec, std::string_view eps_spec, const SearchOptions& options) {
  json params = {{"t_grid", t_spec}, {"eps_grid", eps_spec}};
  params.update(options_json(options));
  return guarded("probe", std::move(params), [&](Envelope& e) {
    const auto t_grid = parse_grid(t_spec);
    const auto eps_grid = parse_grid(eps_spec);
    const ApproxQuery base = make_query(Rational(1, 2), Rational(1, 2), options);
    const auto rows = complexity_probe(t_grid, eps_grid, base);

    json table = json::array();
    std::uint64_t ok_rows = 0;
    std::uint64_t candidates = 0;
    for (const auto& row : rows) {
      ok_rows += row.ok ? 1 : 0;
      candidates += row.candidates_examined;
      table.push_back({{"t", rational_json(row.t)},
                       {"epsilon", rational_json(row.epsilon)},
                       {"status", row.ok ? kStatusOk : kStatusCapExceeded},
                       {"p", row.pair ? json(row.pair->p()) : json()},
                       {"q", row.pair ? json(row.pair->q()) : json()},
                       {"error", row.error ? rational_json(*row.error) : json()},
                       {"strategy", row.strategy_used ? json(std::string(to_string(*row.strategy_used))) : json()},
                       {"max_prime_touched", row.max_prime_touched},
                       {"candidates_examined", row.candidates_examined}});
    }
    json trend = json::array();
    for (const auto& point : probe_trend(rows))
      trend.push_back({{"epsilon", rational_json(point.epsilon)}, {"max_prime_touched", point.max_prime_touched}});
    const auto monotone = count_monotone_steps(rows);
    e.result = {{"rows", std::move(table)},
                {"trend", std::move(trend)},
                {"monotone_steps", {{"nondecreasing", monotone.nondecreasing}, {"comparisons", monotone.comparisons}}}};
    e.telemetry = {{"rows", rows.size()}, {"ok_rows", ok_rows}, {"candidates_examined", candidates}};
    if (ok_rows != rows.size()) {
      e.status = kStatusCapExceeded;
      e.message = std::to_string(rows.size() - ok_rows) + " probe row(s) hit their caps";
    }
  });
}

Envelope cmd_primes(std::uint64_t limit, bool list) {
  return guarded("primes", {{"limit", limit}, {"list", list}}, [&](Envelope& e) {
    if (list) {
      const auto table = primes_up_to(limit);
      e.result = {{"limit", limit}, {"count", table.size()}};
      e.result["primes"] = std::vector<std::uint64_t>(table.primes().begin(), table.primes().end());
    } else {
      if (limit < 2) throw DomainError("primes requires limit >= 2, got " + std::to_string(limit));
      e.result = {{"limit", limit}, {"count", prime_count(limit)}};
    }
  });
}

}  // namespace primepair::cli
