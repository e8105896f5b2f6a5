#pragma once

#include "herd/herdability.hpp"
#include "herd/json_io.hpp"

namespace herd {

Json verdict_to_json(const HerdabilityVerdict& v);
Json walk_sets_to_json(const WalkSets& ws, int only_input = -1);
Json branching_to_json(const BranchingAnalysis& ba);
Json sign_herdability_to_json(const SignHerdabilityReport& r);

/// Runs the full analysis battery on a parsed input (reachability, herdable
/// states, complete herdability, unisigned-column test, sign herdability,
/// positivity shortcut, branching for single-input graphs, walk sets) and
/// assembles the JSON report with stable key order. Throws std::logic_error
/// when the assembled report violates one of its internal consistency
/// invariants.
Json build_analysis_report(const ParsedInput& input);

}  // namespace herd
