// primepair: prime pairs whose normalized difference (p - q)/(p + q)
// approximates a target, plus S_N density surveys and prerequisite scans.
//
// Exit codes: 0 ok, 1 usage or domain error, 2 cap exceeded.

#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "primepair/cli.hpp"

namespace cli = primepair::cli;

int main(int argc, char** argv) {
  CLI::App app{"Prime pairs with a prescribed normalized difference"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "object";
  bool timings = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "object"}));
  app.add_flag("--timings", timings, "Add elapsed_ms to telemetry (makes output run-dependent)");

  cli::SearchOptions search;
  auto add_search_flags = [&](CLI::App* sub) {
    sub->add_option("--mode", search.mode, "Search strategy")->check(CLI::IsMember({"targeted", "direct", "auto"}));
    sub->add_option("--q-start", search.q_start, "First q for targeted search");
    sub->add_option("--q-cap", search.q_cap, "Largest q for targeted search");
    sub->add_option("--n0", search.n0, "First bound for direct search");
    sub->add_option("--n-cap", search.n_cap, "Largest bound for direct search");
    sub->add_option("--policy", search.policy, "Return policy")->check(CLI::IsMember({"first", "best"}));
  };

  std::string t_text, eps_text;
  auto* approximate = app.add_subcommand("approximate", "Find primes p > q with |(p-q)/(p+q) - t| < eps");
  approximate->add_option("t", t_text, "Target in (0,1), decimal or fraction")->required();
  approximate->add_option("eps", eps_text, "Tolerance > 0, decimal or fraction")->required();
  add_search_flags(approximate);

  std::uint64_t density_n = 0;
  std::vector<std::string> window{"0.05", "0.95"};
  auto* density = app.add_subcommand("density", "Gap statistics of S_N inside a window");
  density->add_option("N", density_n, "Prime bound")->required();
  density->add_option("--window", window, "Window endpoints A B")->expected(2);

  std::uint64_t n_max_bertrand = 100'000;
  std::uint64_t x_max_pi = 1'000'000;
  auto* checks = app.add_subcommand("checks", "Scan Bertrand's postulate and pi(x) >= x/(2 ln x)");
  checks->add_option("n_max_bertrand", n_max_bertrand, "Bertrand scan bound");
  checks->add_option("x_max_pi", x_max_pi, "pi(x) scan bound");

  auto* verify = app.add_subcommand("verify-paper-examples", "Re-derive the published worked traces exactly");

  std::string t_grid, eps_grid;
  auto* probe = app.add_subcommand("probe", "Search effort over a (t, eps) grid");
  probe->add_option("t_grid", t_grid, "a:b:step or comma list")->required();
  probe->add_option("eps_grid", eps_grid, "a:b:step or comma list")->required();
  add_search_flags(probe);

  std::uint64_t primes_limit = 0;
  bool list = false;
  auto* primes = app.add_subcommand("primes", "Count (or list) primes up to a limit");
  primes->add_option("limit", primes_limit, "Upper limit")->required();
  primes->add_flag("--list", list, "Include the primes themselves");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const auto started = std::chrono::steady_clock::now();
  cli::Envelope envelope;
  if (*approximate) {
    envelope = cli::cmd_approximate(t_text, eps_text, search);
  } else if (*density) {
    envelope = cli::cmd_density(density_n, window[0], window[1]);
  } else if (*checks) {
    envelope = cli::cmd_checks(n_max_bertrand, x_max_pi);
  } else if (*verify) {
    envelope = cli::cmd_verify_paper_examples();
  } else if (*probe) {
    envelope = cli::cmd_probe(t_grid, eps_grid, search);
  } else {
    envelope = cli::cmd_primes(primes_limit, list);
  }
  if (timings) {
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
    envelope.telemetry["elapsed_ms"] = elapsed.count();
  }

  std::cout << cli::render(envelope, cli::parse_output_format(format));
  if (!envelope.message.empty()) std::cerr << "primepair " << envelope.command << ": " << envelope.message << '\n';
  return cli::exit_code(envelope);
}
