#include "herd/linsys.hpp"

#include <stdexcept>

#include "herd/walks.hpp"

namespace herd {

ControllabilityMatrix controllability_matrix(const LinearSystem& sys) {
  validate_system(sys);
  const Eigen::Index n = sys.n(), m = sys.m();
  ControllabilityMatrix cm;
  cm.n = n;
  cm.m = m;
  cm.C = RationalMatrix::Zero(n, n * m);
  cm.C.leftCols(m) = sys.B;
  for (Eigen::Index d = 1; d < n; ++d)
    cm.C.middleCols(m * d, m) = sys.A * cm.C.middleCols(m * (d - 1), m);
  return cm;
}

WalkWeightTable rho_table(const LinearSystem& sys) {
  validate_system(sys);
  WalkWeightTable table;
  table.n = sys.n();
  table.m = sys.m();
  table.blocks.reserve(table.n);
  table.blocks.push_back(sys.B);
  for (Eigen::Index d = 1; d < table.n; ++d)
    table.blocks.push_back(sys.A * table.blocks.back());
  return table;
}

void fill_signed_split(WalkWeightTable& table, const SignedDigraph& g,
                       int cap) {
  if (g.n_states != table.n || g.n_inputs != table.m)
    throw std::invalid_argument("graph does not match the rho table shape");
  std::vector<RationalMatrix> plus, minus;
  for (int d = 1; d <= table.n; ++d) {
    RationalMatrix p = RationalMatrix::Zero(table.n, table.m);
    RationalMatrix q = RationalMatrix::Zero(table.n, table.m);
    for (int j = 0; j < table.m; ++j)
      for (int i = 0; i < table.n; ++i)
        for (const Walk& w : enumerate_walks(g, NodeId::input(j),
                                             NodeId::state(i), d, cap)) {
          if (!w.weight)
            throw std::invalid_argument(
                "signed split requires a fully weighted graph");
          (w.sign > 0 ? p(i, j) : q(i, j)) += *w.weight;
        }
    plus.push_back(std::move(p));
    minus.push_back(std::move(q));
  }
  table.plus = std::move(plus);
  table.minus = std::move(minus);
}

namespace {

// Scales each column by the lcm of its denominators; positive scaling
// preserves the column space and the pivot structure.
IntegerMatrix clear_denominators(const RationalMatrix& M) {
  IntegerMatrix out(M.rows(), M.cols());
  for (Eigen::Index j = 0; j < M.cols(); ++j) {
    Integer scale(1);
    for (Eigen::Index i = 0; i < M.rows(); ++i)
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
              M(i, j).get_den().get_mpz_t());
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
      Rational scaled = M(i, j) * Rational(scale);
      scaled.canonicalize();
      out(i, j) = scaled.get_num();
    }
  }
  return out;
}

}  // namespace

RangeBasis range_basis(const RationalMatrix& M) {
  IntegerMatrix W = clear_denominators(M);
  const Eigen::Index rows = W.rows(), cols = W.cols();

  RangeBasis rb;
  Integer prev(1);
  Eigen::Index pivot_row = 0;
  for (Eigen::Index c = 0; c < cols && pivot_row < rows; ++c) {
    Eigen::Index r = pivot_row;
    while (r < rows && W(r, c) == 0) ++r;
    if (r == rows) continue;
    if (r != pivot_row) W.row(r).swap(W.row(pivot_row));

    // One-step fraction-free elimination: every division below is exact.
    for (Eigen::Index i = pivot_row + 1; i < rows; ++i) {
      for (Eigen::Index k = c + 1; k < cols; ++k) {
        Integer t = W(pivot_row, c) * W(i, k) - W(i, c) * W(pivot_row, k);
        mpz_divexact(W(i, k).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      W(i, c) = 0;
    }
    prev = W(pivot_row, c);
    rb.pivot_columns.push_back(c);
    ++pivot_row;
  }
  rb.rank = static_cast<Eigen::Index>(rb.pivot_columns.size());
  for (Eigen::Index c : rb.pivot_columns) rb.basis.push_back(M.col(c));
  return rb;
}

RangeBasis range_basis(const ControllabilityMatrix& cm) {
  return range_basis(cm.C);
}

bool is_positive_system(const LinearSystem& sys) {
  validate_system(sys);
  for (Eigen::Index i = 0; i < sys.n(); ++i)
    for (Eigen::Index j = 0; j < sys.n(); ++j)
      if (i != j && sys.A(i, j) < 0) return false;
  for (Eigen::Index i = 0; i < sys.n(); ++i)
    for (Eigen::Index j = 0; j < sys.m(); ++j)
      if (sys.B(i, j) < 0) return false;
  return true;
}

}  // namespace herd
