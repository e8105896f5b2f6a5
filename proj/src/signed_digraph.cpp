#include "herd/signed_digraph.hpp"

#include <charconv>
#include <set>
#include <stdexcept>

namespace herd {

void validate_system(const LinearSystem& sys) {
  if (sys.A.rows() != sys.A.cols())
    throw std::invalid_argument("A must be square");
  if (sys.B.rows() != sys.A.rows())
    throw std::invalid_argument("B must have as many rows as A");
  if (sys.B.cols() < 1) throw std::invalid_argument("B must have a column");
}

std::string to_string(const NodeId& id) {
  return (id.is_state() ? "x" : "u") + std::to_string(id.index + 1);
}

NodeId parse_node_id(const std::string& text) {
  if (text.size() < 2 || (text[0] != 'x' && text[0] != 'u'))
    throw std::invalid_argument("bad node id: \"" + text + "\"");
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data() + 1, text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1)
    throw std::invalid_argument("bad node id: \"" + text + "\"");
  return {text[0] == 'x' ? NodeId::Kind::State : NodeId::Kind::Input,
          value - 1};
}

void validate_graph(const SignedDigraph& g) {
  if (g.n_states < 1 || g.n_inputs < 1)
    throw std::invalid_argument("graph needs at least one state and input");
  std::set<std::pair<NodeId, NodeId>> seen;
  for (const Edge& e : g.edges) {
    const int limit_from = e.from.is_state() ? g.n_states : g.n_inputs;
    if (e.from.index < 0 || e.from.index >= limit_from)
      throw std::invalid_argument("edge source out of range: " +
                                  to_string(e.from));
    if (!e.to.is_state())
      throw std::invalid_argument("edges may not target input node " +
                                  to_string(e.to));
    if (e.to.index < 0 || e.to.index >= g.n_states)
      throw std::invalid_argument("edge target out of range: " +
                                  to_string(e.to));
    if (e.sign != 1 && e.sign != -1)
      throw std::invalid_argument("edge sign must be +1 or -1");
    if (e.weight && sgn(*e.weight) != e.sign)
      throw std::invalid_argument("weight sign mismatch on edge " +
                                  to_string(e.from) + " -> " + to_string(e.to));
    if (e.weight && *e.weight == 0)
      throw std::invalid_argument("zero weight on edge " + to_string(e.from) +
                                  " -> " + to_string(e.to));
    if (!seen.insert({e.from, e.to}).second)
      throw std::invalid_argument("duplicate edge " + to_string(e.from) +
                                  " -> " + to_string(e.to));
  }
}

SignedDigraph system_to_graph(const LinearSystem& sys) {
  validate_system(sys);
  SignedDigraph g;
  g.n_states = static_cast<int>(sys.n());
  g.n_inputs = static_cast<int>(sys.m());
  for (int i = 0; i < g.n_states; ++i)
    for (int j = 0; j < g.n_states; ++j)
      if (sys.A(j, i) != 0)
        g.edges.push_back({NodeId::state(i), NodeId::state(j),
                           sgn(sys.A(j, i)), sys.A(j, i)});
  for (int i = 0; i < g.n_inputs; ++i)
    for (int j = 0; j < g.n_states; ++j)
      if (sys.B(j, i) != 0)
        g.edges.push_back({NodeId::input(i), NodeId::state(j),
                           sgn(sys.B(j, i)), sys.B(j, i)});
  return g;
}

LinearSystem graph_to_sign_pattern(const SignedDigraph& g) {
  validate_graph(g);
  LinearSystem sys;
  sys.A = RationalMatrix::Zero(g.n_states, g.n_states);
  sys.B = RationalMatrix::Zero(g.n_states, g.n_inputs);
  for (const Edge& e : g.edges) {
    const Rational value = e.weight ? *e.weight : Rational(e.sign);
    if (e.from.is_state())
      sys.A(e.to.index, e.from.index) = value;
    else
      sys.B(e.to.index, e.from.index) = value;
  }
  return sys;
}

}  // namespace herd
