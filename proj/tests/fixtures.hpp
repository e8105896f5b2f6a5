#pragma once

#include <initializer_list>

#include "herd/linear_system.hpp"
#include "herd/signed_digraph.hpp"

namespace herd::testing {

inline RationalMatrix mat(
    std::initializer_list<std::initializer_list<long>> rows) {
  RationalMatrix M(rows.size(), rows.begin()->size());
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long v : row) M(i, j++) = Rational(v);
    ++i;
  }
  return M;
}

// Three-state, two-input example with the mixed-sign cycle x2 <-> x3 and a
// self-loop on x1.
inline LinearSystem example_system() {
  return {mat({{-1, 0, 0}, {5, 0, 2}, {4, -3, 0}}),
          mat({{0, -2}, {2, 0}, {0, 3}})};
}

// Sign-only graph of example_system().
inline SignedDigraph example_sign_graph() {
  SignedDigraph g;
  g.n_states = 3;
  g.n_inputs = 2;
  g.edges = {
      {NodeId::state(0), NodeId::state(0), -1, {}},
      {NodeId::state(0), NodeId::state(1), +1, {}},
      {NodeId::state(0), NodeId::state(2), +1, {}},
      {NodeId::state(1), NodeId::state(2), -1, {}},
      {NodeId::state(2), NodeId::state(1), +1, {}},
      {NodeId::input(0), NodeId::state(1), +1, {}},
      {NodeId::input(1), NodeId::state(0), -1, {}},
      {NodeId::input(1), NodeId::state(2), +1, {}},
  };
  return g;
}

// Diamond whose two u -> x4 walks carry opposite signs, so the total walk
// weight to x4 can cancel.
inline LinearSystem cancellation_system() {
  return {mat({{0, 0, 0, 0}, {-1, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 1, 0}}),
          mat({{1}, {0}, {0}, {0}})};
}

inline SignedDigraph cancellation_graph() {
  return system_to_graph(cancellation_system());
}

// Positive dilation: one input feeding two states with matching signs.
inline LinearSystem dilation_positive() {
  return {mat({{0, 0}, {0, 0}}), mat({{1}, {1}})};
}

// Signed dilation: the same structure with opposing signs.
inline LinearSystem dilation_negative() {
  return {mat({{0, 0}, {0, 0}}), mat({{-1}, {1}})};
}

// Single-input out-branching of depth 2: u -> {x1-, x2+},
// x1 -> {x3-, x4+}, x2 -> {x5-, x6+}.
inline LinearSystem branching_system() {
  return {mat({{0, 0, 0, 0, 0, 0},
               {0, 0, 0, 0, 0, 0},
               {-1, 0, 0, 0, 0, 0},
               {1, 0, 0, 0, 0, 0},
               {0, -1, 0, 0, 0, 0},
               {0, 1, 0, 0, 0, 0}}),
          mat({{-1}, {1}, {0}, {0}, {0}, {0}})};
}

inline SignedDigraph branching_graph() {
  return system_to_graph(branching_system());
}

}  // namespace herd::testing
