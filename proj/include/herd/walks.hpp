#pragma once

#include <set>
#include <vector>

#include "herd/signed_digraph.hpp"

namespace herd {

/// Walk-enumeration refuses lengths above this bound unless the caller
/// raises it explicitly; the cost is exponential in the length.
inline constexpr int kDefaultOracleCap = 12;

/// Per input j and walk length d, the states reachable through at least one
/// positive (P) respectively negative (N) walk of length exactly d. The two
/// sets may overlap.
struct WalkSets {
  int n_states = 0;
  int n_inputs = 0;
  int depth_bound = 0;

  /// positive[j][d-1] / negative[j][d-1] hold 0-based state indices.
  std::vector<std::vector<std::set<int>>> positive;
  std::vector<std::vector<std::set<int>>> negative;

  const std::set<int>& P(int input, int depth) const {
    return positive.at(input).at(depth - 1);
  }
  const std::set<int>& N(int input, int depth) const {
    return negative.at(input).at(depth - 1);
  }
};

struct WalkSetsStats {
  long long edge_visits = 0;
};

/// Layered sign-BFS over (state, sign) pairs, exact and weight-blind.
/// Layer 1 is seeded from the input edges; layer d+1 composes layer d with
/// the state edges, multiplying signs. Throws std::invalid_argument when
/// depth_bound < 1.
WalkSets compute_walk_sets(const SignedDigraph& g, int depth_bound,
                           WalkSetsStats* stats = nullptr);

/// Sign-blind reachability per input plus the input-connectability flag
/// (every state reachable from at least one input).
struct ReachabilityReport {
  std::vector<std::set<int>> reachable;  // reachable[j] = states seen from u_j
  bool input_connectable = false;
};

ReachabilityReport reachability(const SignedDigraph& g);

/// Exhaustively lists the walks of exactly `length` edges from `from` to
/// `to`, ordered lexicographically by node sequence. Each walk carries its
/// sign and, when the graph is fully weighted along it, its weight.
/// Intended as a brute-force oracle for small graphs; throws
/// std::invalid_argument when length < 1 or length > cap.
std::vector<Walk> enumerate_walks(const SignedDigraph& g, NodeId from,
                                  NodeId to, int length,
                                  int cap = kDefaultOracleCap);

}  // namespace herd
