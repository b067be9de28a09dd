#pragma once

// Reader for tests/fixtures/oracle_fixtures.txt (written by tools/oracle_fixtures).

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef PRIMEPAIR_FIXTURE_DIR
#error "PRIMEPAIR_FIXTURE_DIR must be defined"
#endif

namespace fixtures {

struct Line {
  std::string kind;
  std::vector<std::string> fields;  // everything after the kind
};

inline std::string path() { return std::string(PRIMEPAIR_FIXTURE_DIR) + "/oracle_fixtures.txt"; }

inline std::vector<Line> load() {
  std::ifstream in(path());
  if (!in) throw std::runtime_error("cannot open " + path());
  std::vector<Line> out;
  for (std::string text; std::getline(in, text);) {
    if (text.empty() || text[0] == '#') continue;
    std::istringstream fields(text);
    Line line;
    fields >> line.kind;
    for (std::string f; fields >> f;) line.fields.push_back(f);
    out.push_back(std::move(line));
  }
  return out;
}

inline std::vector<Line> of_kind(const std::string& kind) {
  std::vector<Line> out;
  for (auto& line : load())
    if (line.kind == kind) out.push_back(line);
  return out;
}

/// A search fixture: t epsilon a b -> p q error rank, or "none".
struct Search {
  std::string t, epsilon;
  std::uint64_t a, b;
  std::optional<std::uint64_t> p, q;
  std::string error;
  std::uint64_t rank = 0;
};

inline std::vector<Search> searches(const std::string& kind) {
  std::vector<Search> out;
  for (const auto& line : of_kind(kind)) {
    const auto& f = line.fields;
    Search s{f.at(0), f.at(1), std::stoull(f.at(2)), std::stoull(f.at(3))};
    if (f.at(4) != "none") {
      s.p = std::stoull(f.at(4));
      s.q = std::stoull(f.at(5));
      s.error = f.at(6);
      s.rank = std::stoull(f.at(7));
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace fixtures
