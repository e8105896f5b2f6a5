#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "herd/linsys.hpp"
#include "herd/walks.hpp"

namespace herd {

/// Answer to "can every state in X be driven above any threshold h >= 0
/// simultaneously?". Herdable verdicts from check_set carry a witness
/// combination alpha with (C alpha)_i >= 1 on X; infeasible ones carry a
/// Farkas dual y >= 0, y != 0 with yT C_X = 0.
struct HerdabilityVerdict {
  std::set<int> query_set;  // 0-based state indices
  bool herdable = false;
  std::optional<RationalVector> witness;
  std::optional<RationalVector> certificate;  // one entry per element of X
};

/// States whose row of C is nonzero; exactly the individually herdable ones.
std::set<int> herdable_states(const ControllabilityMatrix& cm);

/// Decides herdability of X by exact feasibility of (C alpha)_i >= 1 on X.
/// Scale invariance of range(C) makes ">= 1" equivalent to "> 0", so the
/// threshold never enters. Throws std::invalid_argument on an empty or
/// out-of-range X.
HerdabilityVerdict check_set(const ControllabilityMatrix& cm,
                             const std::set<int>& X);

HerdabilityVerdict completely_herdable(const ControllabilityMatrix& cm);

/// Sufficient test: when every state i has some column j with C(i,j) != 0
/// and column j unisigned, returns one such assignment (smallest column per
/// state). Absence proves nothing.
std::optional<std::map<int, Eigen::Index>> unisigned_sufficient(
    const ControllabilityMatrix& cm);

/// Per-state witness used by the sign-herdability test: walks of length
/// `depth` from input `input` decide the state, and at that (input, depth)
/// exactly one of N, P is empty.
struct SignWitness {
  int input = 0;  // 0-based
  int depth = 0;  // walk length
};

struct SignHerdabilityReport {
  bool completely_sign_herdable = false;
  std::map<int, SignWitness> witness;  // state -> (input, depth), when positive
};

/// Weight-independent sufficient test over the sign pattern only: positive
/// iff every state has an (input, depth) pair whose walk sets cover it with
/// exactly one of N, P empty. Searches depths 1..n.
SignHerdabilityReport sign_herdable(const SignedDigraph& g);

/// Same test with an explicit depth bound (exposed for cross-checking that
/// depths beyond n do not change verdicts).
SignHerdabilityReport sign_herdable(const SignedDigraph& g, int depth_bound);

/// Complete-herdability shortcut for positive systems: the verdict equals
/// input connectability and no feasibility problem is solved, so no witness
/// is attached. Throws std::invalid_argument on non-positive systems.
HerdabilityVerdict positive_system_verdict(const LinearSystem& sys);

struct DepthLayer {
  std::set<int> positive;
  std::set<int> negative;
};

/// Structure report for single-input graphs that are input-rooted
/// out-branchings (every state has exactly one walk from the input). When
/// the property fails only is_out_branching / root_input are meaningful.
struct BranchingAnalysis {
  bool is_out_branching = false;
  int root_input = 0;
  int d_max = 0;
  std::vector<DepthLayer> layers;        // layers[d-1], disjoint P/N
  std::vector<std::set<int>> families;   // all unions of per-depth choices
  bool families_truncated = false;
  int max_herdable_size = 0;  // sum over depths of max(|N_d|, |P_d|)
  int k_walk_size = 0;        // d_max, for comparison against k-walk control
};

inline constexpr int kMaxFamilyCount = 4096;

/// Throws std::invalid_argument when g has more than one input.
BranchingAnalysis analyze_branching(const SignedDigraph& g);

/// Families not strictly contained in another family.
std::vector<std::set<int>> maximal_families(const BranchingAnalysis& ba);

/// Re-validates a verdict against its defining inequalities in exact
/// arithmetic; throws std::logic_error on any violation.
void validate_verdict(const HerdabilityVerdict& v,
                      const ControllabilityMatrix& cm);

}  // namespace herd
