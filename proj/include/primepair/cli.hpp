#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "primepair/rational.hpp"
#include "primepair/strategies.hpp"

namespace primepair::cli {

using json = nlohmann::ordered_json;

enum class OutputFormat { table, object };

OutputFormat parse_output_format(std::string_view text);

inline constexpr std::string_view kStatusOk = "ok";
inline constexpr std::string_view kStatusCapExceeded = "cap_exceeded";
inline constexpr std::string_view kStatusError = "error";

/// One per invocation. The object form has exactly these keys, in this order:
/// command, version, status, message, parameters, result, telemetry.
struct Envelope {
  std::string command;
  std::string version;
  std::string status;
  std::string message;
  json parameters = json::object();
  json result = nullptr;
  json telemetry = json::object();

  friend bool operator==(const Envelope&, const Envelope&) = default;
};

json to_json(const Envelope& envelope);
/// Throws DomainError when `object` does not follow the envelope schema.
Envelope envelope_from_json(const json& object);
void validate_envelope(const json& object);

/// 0 ok, 1 usage or domain error, 2 cap exceeded.
int exit_code(const Envelope& envelope);

std::string render(const Envelope& envelope, OutputFormat format);

/// {"exact": "num/den", "decimal": 12 significant digits}
json rational_json(const Rational& value);

/// "a:b:step" (inclusive, exact steps) or a comma list; each item is a
/// decimal or fraction string.
std::vector<Rational> parse_grid(std::string_view spec);

struct SearchOptions {
  std::string mode = "auto";
  std::uint64_t q_start = 2;
  std::uint64_t q_cap = 100'000'000;
  std::uint64_t n0 = 100;
  std::uint64_t n_cap = 1'000'000;
  std::string policy = "first";
};

/// Caps applied by `checks`; larger bounds report cap_exceeded.
inline constexpr std::uint64_t kChecksCap = 100'000'000;

Envelope cmd_approximate(std::string_view t, std::string_view epsilon, const SearchOptions& options = {});
Envelope cmd_density(std::uint64_t N, std::string_view window_a, std::string_view window_b);
Envelope cmd_checks(std::uint64_t n_max_bertrand, std::uint64_t x_max_pi);
Envelope cmd_verify_paper_examples();
Envelope cmd_probe(std::string_view t_grid, std::string_view eps_grid, const SearchOptions& options = {});
Envelope cmd_primes(std::uint64_t limit, bool list);

}  // namespace primepair::cli
