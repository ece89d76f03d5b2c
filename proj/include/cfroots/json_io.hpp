#pragma once

#include <string>
#include <vector>

#include "cfroots/solver.hpp"

namespace cfroots {

/// JSON document for a solve run.  All numeric payloads are decimal strings
/// so unbounded integers are never truncated; see docs/output-schema.json.
std::string results_to_json(const std::vector<std::string>& variables,
                            const std::vector<IsolationResult>& results,
                            const SolveStats& stats);

}  // namespace cfroots
