#pragma once

#include <optional>
#include <string>
#include <vector>

#include "herd/linear_system.hpp"
#include "herd/rational.hpp"

namespace herd {

/// Node of the interaction graph. State and input nodes live in disjoint
/// namespaces; indices are 0-based internally and rendered as "x1".."xn",
/// "u1".."um" externally.
struct NodeId {
  enum class Kind { State, Input };
  Kind kind = Kind::State;
  int index = 0;

  static NodeId state(int i) { return {Kind::State, i}; }
  static NodeId input(int j) { return {Kind::Input, j}; }
  bool is_state() const { return kind == Kind::State; }
  friend bool operator==(const NodeId&, const NodeId&) = default;
  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

std::string to_string(const NodeId& id);

/// Parses "x3" / "u1". Throws std::invalid_argument on malformed ids.
NodeId parse_node_id(const std::string& text);

/// Directed edge with mandatory sign and optional exact weight. When a
/// weight is present its sign must equal `sign`.
struct Edge {
  NodeId from;
  NodeId to;
  int sign = 1;
  std::optional<Rational> weight;
};

/// Signed (optionally weighted) directed interaction graph. Edges never
/// target input nodes; at most one edge per ordered node pair.
struct SignedDigraph {
  int n_states = 0;
  int n_inputs = 0;
  std::vector<Edge> edges;
};

/// Throws std::invalid_argument on any structural violation: bad node
/// indices, edges into inputs, duplicate (from, to) pairs, sign not in
/// {-1, +1}, or a weight whose sign disagrees with the edge sign.
void validate_graph(const SignedDigraph& g);

/// Walk through the graph: nodes[i] --edges[i]--> nodes[i+1]. The sign is
/// the product of edge signs; the weight (present when every edge carries
/// one) is the product of edge weights.
struct Walk {
  std::vector<NodeId> nodes;
  std::vector<int> edge_indices;  // indices into SignedDigraph::edges
  int sign = 1;
  std::optional<Rational> weight;

  int length() const { return static_cast<int>(edge_indices.size()); }
};

/// Builds the weighted interaction graph of a system: edge x_i -> x_j with
/// weight A(j,i) iff A(j,i) != 0, edge u_i -> x_j with weight B(j,i) iff
/// B(j,i) != 0. Signs are derived from the weights.
SignedDigraph system_to_graph(const LinearSystem& sys);

/// Canonical system representative of a graph: entries are edge weights
/// when present, otherwise the edge signs as +-1.
LinearSystem graph_to_sign_pattern(const SignedDigraph& g);

}  // namespace herd
