#pragma once

#include <json.hpp>

namespace primepair::cli {

/// Re-derives the two published worked traces (t = 1/3 and t = 1/10, both
/// with epsilon = 1/100) in exact arithmetic and compares every printed
/// number at the precision it was printed with. Returns the result payload;
/// result["all_match"] is the overall verdict.
nlohmann::ordered_json verify_worked_examples();

}  // namespace primepair::cli
