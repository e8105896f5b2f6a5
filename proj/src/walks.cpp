#include "herd/walks.hpp"

#include <algorithm>
#include <stdexcept>

namespace herd {

namespace {

struct Adjacency {
  // out[v] = (target state, sign, edge index), sorted by target.
  std::vector<std::vector<std::tuple<int, int, int>>> state_out;
  std::vector<std::vector<std::tuple<int, int, int>>> input_out;
};

Adjacency build_adjacency(const SignedDigraph& g) {
  Adjacency adj;
  adj.state_out.resize(g.n_states);
  adj.input_out.resize(g.n_inputs);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    const Edge& edge = g.edges[e];
    auto& out = edge.from.is_state() ? adj.state_out[edge.from.index]
                                     : adj.input_out[edge.from.index];
    out.emplace_back(edge.to.index, edge.sign, e);
  }
  for (auto& list : adj.state_out) std::sort(list.begin(), list.end());
  for (auto& list : adj.input_out) std::sort(list.begin(), list.end());
  return adj;
}

}  // namespace

WalkSets compute_walk_sets(const SignedDigraph& g, int depth_bound,
                           WalkSetsStats* stats) {
  validate_graph(g);
  if (depth_bound < 1)
    throw std::invalid_argument("depth_bound must be at least 1");
  const Adjacency adj = build_adjacency(g);

  WalkSets ws;
  ws.n_states = g.n_states;
  ws.n_inputs = g.n_inputs;
  ws.depth_bound = depth_bound;
  ws.positive.assign(g.n_inputs, std::vector<std::set<int>>(depth_bound));
  ws.negative.assign(g.n_inputs, std::vector<std::set<int>>(depth_bound));

  long long visits = 0;
  for (int j = 0; j < g.n_inputs; ++j) {
    for (const auto& [target, sign, e] : adj.input_out[j]) {
      ++visits;
      (sign > 0 ? ws.positive : ws.negative)[j][0].insert(target);
    }
    for (int d = 1; d < depth_bound; ++d) {
      for (const int v : ws.positive[j][d - 1])
        for (const auto& [target, sign, e] : adj.state_out[v]) {
          ++visits;
          (sign > 0 ? ws.positive : ws.negative)[j][d].insert(target);
        }
      for (const int v : ws.negative[j][d - 1])
        for (const auto& [target, sign, e] : adj.state_out[v]) {
          ++visits;
          (sign > 0 ? ws.negative : ws.positive)[j][d].insert(target);
        }
    }
  }
  if (stats) stats->edge_visits = visits;
  return ws;
}

ReachabilityReport reachability(const SignedDigraph& g) {
  validate_graph(g);
  const Adjacency adj = build_adjacency(g);
  ReachabilityReport report;
  report.reachable.resize(g.n_inputs);
  std::vector<bool> covered(g.n_states, false);
  for (int j = 0; j < g.n_inputs; ++j) {
    std::vector<int> frontier;
    std::vector<bool> seen(g.n_states, false);
    for (const auto& [target, sign, e] : adj.input_out[j])
      if (!seen[target]) {
        seen[target] = true;
        frontier.push_back(target);
      }
    while (!frontier.empty()) {
      const int v = frontier.back();
      frontier.pop_back();
      for (const auto& [target, sign, e] : adj.state_out[v])
        if (!seen[target]) {
          seen[target] = true;
          frontier.push_back(target);
        }
    }
    for (int v = 0; v < g.n_states; ++v)
      if (seen[v]) {
        report.reachable[j].insert(v);
        covered[v] = true;
      }
  }
  report.input_connectable =
      std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
  return report;
}

std::vector<Walk> enumerate_walks(const SignedDigraph& g, NodeId from,
                                  NodeId to, int length, int cap) {
  validate_graph(g);
  if (length < 1) throw std::invalid_argument("walk length must be >= 1");
  if (length > cap)
    throw std::invalid_argument("walk length " + std::to_string(length) +
                                " exceeds the enumeration cap " +
                                std::to_string(cap));
  if (!to.is_state()) return {};  // no edge ever enters an input node
  if (to.index < 0 || to.index >= g.n_states)
    throw std::invalid_argument("enumerate_walks: target node out of range");
  const Adjacency adj = build_adjacency(g);

  // can_reach[r] = states with a walk of exactly r edges to `to`; prunes the
  // DFS so dead branches are never entered.
  std::vector<std::vector<bool>> can_reach(
      length, std::vector<bool>(g.n_states, false));
  can_reach[0][to.index] = true;
  for (int r = 1; r < length; ++r)
    for (int v = 0; v < g.n_states; ++v)
      for (const auto& [target, sign, e] : adj.state_out[v])
        if (can_reach[r - 1][target]) {
          can_reach[r][v] = true;
          break;
        }

  std::vector<Walk> walks;
  Walk current;
  current.nodes.push_back(from);
  current.sign = 1;
  current.weight = Rational(1);

  auto descend = [&](auto&& self, NodeId at, int remaining) -> void {
    if (remaining == 0) {
      if (at == to) walks.push_back(current);
      return;
    }
    const auto& out = at.is_state() ? adj.state_out[at.index]
                                    : adj.input_out[at.index];
    for (const auto& [target, sign, e] : out) {
      if (!can_reach[remaining - 1][target]) continue;
      const Edge& edge = g.edges[e];
      current.nodes.push_back(NodeId::state(target));
      current.edge_indices.push_back(e);
      const int old_sign = current.sign;
      const std::optional<Rational> old_weight = current.weight;
      current.sign *= sign;
      if (current.weight && edge.weight)
        current.weight = *current.weight * *edge.weight;
      else
        current.weight.reset();
      self(self, NodeId::state(target), remaining - 1);
      current.nodes.pop_back();
      current.edge_indices.pop_back();
      current.sign = old_sign;
      current.weight = old_weight;
    }
  };

  const int start_limit = from.is_state() ? g.n_states : g.n_inputs;
  if (from.index < 0 || from.index >= start_limit)
    throw std::invalid_argument("enumerate_walks: start node out of range");
  descend(descend, from, length);
  return walks;  // DFS over sorted adjacency emits lexicographic order
}

}  // namespace herd
