#pragma once

#include <optional>
#include <vector>

#include "herd/linear_system.hpp"
#include "herd/signed_digraph.hpp"

namespace herd {

/// The n x nm block matrix [B, AB, ..., A^{n-1}B]. Block d (1-based)
/// occupies columns m(d-1) .. md-1 and equals A^{d-1}B, so entry
/// (i, m(d-1)+j) is the total signed weight of length-d walks u_j -> x_i.
struct ControllabilityMatrix {
  RationalMatrix C;
  Eigen::Index n = 0;
  Eigen::Index m = 0;

  auto block(int d) const { return C.middleCols(m * (d - 1), m); }
};

ControllabilityMatrix controllability_matrix(const LinearSystem& sys);

/// Walk-weight tables rho(j, i, d) = (A^{d-1}B)(i, j) for d = 1..n.
/// The signed split (total positive- and negative-walk weights) is filled
/// only on request because it costs a full walk enumeration.
struct WalkWeightTable {
  Eigen::Index n = 0;
  Eigen::Index m = 0;
  std::vector<RationalMatrix> blocks;  // blocks[d-1] = A^{d-1}B

  std::optional<std::vector<RationalMatrix>> plus;   // rho^+ >= 0
  std::optional<std::vector<RationalMatrix>> minus;  // rho^- <= 0

  /// j, i are 0-based; d is a walk length in 1..n.
  const Rational& rho(int input, int state, int depth) const {
    return blocks.at(depth - 1)(state, input);
  }
  const Rational& rho_plus(int input, int state, int depth) const {
    return plus.value().at(depth - 1)(state, input);
  }
  const Rational& rho_minus(int input, int state, int depth) const {
    return minus.value().at(depth - 1)(state, input);
  }
};

WalkWeightTable rho_table(const LinearSystem& sys);

/// Fills the rho^+ / rho^- split of `table` by enumerating the walks of the
/// weighted graph `g` (which must be the graph of the same system). Subject
/// to the enumeration cap; see enumerate_walks.
void fill_signed_split(WalkWeightTable& table, const SignedDigraph& g,
                       int cap = 12);

/// Column-space basis extracted by fraction-free (Bareiss) elimination.
/// The basis vectors are original columns of the input matrix.
struct RangeBasis {
  std::vector<RationalVector> basis;
  Eigen::Index rank = 0;
  std::vector<Eigen::Index> pivot_columns;
};

RangeBasis range_basis(const RationalMatrix& M);
RangeBasis range_basis(const ControllabilityMatrix& cm);

/// Metzler A (off-diagonal entries >= 0) and entrywise nonnegative B.
bool is_positive_system(const LinearSystem& sys);

}  // namespace herd
