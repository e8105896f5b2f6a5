#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "herd/linsys.hpp"
#include "oracle.hpp"

using namespace herd;
using namespace herd::testing;

namespace {

const RationalMatrix kExampleC = mat({{0, -2, 0, 2, 0, -2},
                                      {2, 0, 0, -4, -12, -6},
                                      {0, 3, -6, -8, 0, 20}});

}  // namespace

TEST_CASE("controllability matrix of the two-input example") {
  const ControllabilityMatrix cm = controllability_matrix(example_system());
  CHECK(cm.n == 3);
  CHECK(cm.m == 2);
  CHECK(cm.C == kExampleC);
}

TEST_CASE("controllability matrix entries equal walk-weight sums") {
  const SignedDigraph g = system_to_graph(example_system());
  CHECK(controllability_from_walks(g) == kExampleC);
}

TEST_CASE("zero A gives [B, 0, ..., 0]") {
  const LinearSystem sys{mat({{0, 0}, {0, 0}}), mat({{3}, {-1}})};
  const ControllabilityMatrix cm = controllability_matrix(sys);
  CHECK(cm.C.col(0) == sys.B.col(0));
  CHECK(nnz(cm.C.rightCols(1)) == 0);
}

TEST_CASE("positive dilation controllability matrix") {
  const ControllabilityMatrix cm = controllability_matrix(dilation_positive());
  CHECK(cm.C == mat({{1, 0}, {1, 0}}));
}

TEST_CASE("rho table matches matrix powers and the walk oracle") {
  const LinearSystem sys = example_system();
  const WalkWeightTable table = rho_table(sys);
  CHECK(table.rho(0, 2, 2) == Rational(-6));  // u1 -> x3 in two steps
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 3; ++i) CHECK(table.rho(j, i, 1) == sys.B(i, j));

  // Column index identity against the controllability matrix.
  const ControllabilityMatrix cm = controllability_matrix(sys);
  for (int d = 1; d <= 3; ++d)
    for (int j = 0; j < 2; ++j)
      for (int i = 0; i < 3; ++i)
        CHECK(table.rho(j, i, d) == cm.C(i, 2 * (d - 1) + j));
}

TEST_CASE("cancellation: rho to x4 vanishes at unit weights") {
  const WalkWeightTable table = rho_table(cancellation_system());
  CHECK(table.rho(0, 3, 3) == Rational(0));
  CHECK(table.rho(0, 3, 1) == Rational(0));
  CHECK(table.rho(0, 3, 2) == Rational(0));
  CHECK(table.rho(0, 3, 4) == Rational(0));
}

TEST_CASE("signed split decomposes rho with the advertised signs") {
  WalkWeightTable table = rho_table(cancellation_system());
  fill_signed_split(table, cancellation_graph());
  CHECK(table.rho_plus(0, 3, 3) == Rational(1));
  CHECK(table.rho_minus(0, 3, 3) == Rational(-1));

  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const LinearSystem sys = random_system(rng, 4, 2, 0.4);
    const SignedDigraph g = system_to_graph(sys);
    WalkWeightTable t = rho_table(sys);
    fill_signed_split(t, g);
    const WalkSets ws = compute_walk_sets(g, 4);
    for (int d = 1; d <= 4; ++d)
      for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 4; ++i) {
          CHECK(t.rho_plus(j, i, d) + t.rho_minus(j, i, d) == t.rho(j, i, d));
          CHECK(t.rho_plus(j, i, d) >= 0);
          CHECK(t.rho_minus(j, i, d) <= 0);
          CHECK((t.rho_plus(j, i, d) > 0) == (ws.P(j, d).count(i) == 1));
          CHECK((t.rho_minus(j, i, d) < 0) == (ws.N(j, d).count(i) == 1));
        }
  }
}

TEST_CASE("walk-weight sums equal matrix powers on random systems") {
  Rng rng(29);
  for (int trial = 0; trial < 15; ++trial) {
    std::uniform_int_distribution<int> dim(1, 5);
    const int n = dim(rng);
    const LinearSystem sys = random_system(rng, n, 1 + trial % 3);
    const SignedDigraph g = system_to_graph(sys);
    const WalkWeightTable table = rho_table(sys);
    for (int d = 1; d <= n; ++d)
      for (int j = 0; j < sys.m(); ++j)
        for (int i = 0; i < n; ++i) {
          Rational total(0);
          for (const Walk& w :
               enumerate_walks(g, NodeId::input(j), NodeId::state(i), d))
            total += w.weight.value();
          CHECK(total == table.rho(j, i, d));
        }
  }
}

TEST_CASE("one-sided walk-set membership pins the sign of rho") {
  Rng rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const LinearSystem sys = random_system(rng, 5, 2, 0.35);
    const SignedDigraph g = system_to_graph(sys);
    const WalkWeightTable table = rho_table(sys);
    const WalkSets ws = compute_walk_sets(g, 5);
    for (int d = 1; d <= 5; ++d)
      for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 5; ++i) {
          const bool in_p = ws.P(j, d).count(i), in_n = ws.N(j, d).count(i);
          if (in_p && !in_n) CHECK(table.rho(j, i, d) > 0);
          if (in_n && !in_p) CHECK(table.rho(j, i, d) < 0);
          if (!in_p && !in_n) CHECK(table.rho(j, i, d) == 0);
        }
  }
}

TEST_CASE("controllability blocks satisfy the shift identity") {
  Rng rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    const LinearSystem sys = random_system(rng, 4, 2);
    const ControllabilityMatrix cm = controllability_matrix(sys);
    for (int d = 2; d <= 4; ++d)
      CHECK(RationalMatrix(cm.block(d)) ==
            RationalMatrix(sys.A * cm.block(d - 1)));
  }
}

TEST_CASE("range basis of the example has full rank") {
  const RangeBasis rb = range_basis(controllability_matrix(example_system()));
  CHECK(rb.rank == 3);
  CHECK(rb.basis.size() == 3);
  // Independent cross-check: the 3x3 minor on the pivot columns is regular.
  RationalMatrix pivots(3, 3);
  for (int k = 0; k < 3; ++k) pivots.col(k) = rb.basis[k];
  CHECK(det_laplace(pivots) != 0);
}

TEST_CASE("zero matrix has empty range basis") {
  const RangeBasis rb = range_basis(RationalMatrix::Zero(3, 4));
  CHECK(rb.rank == 0);
  CHECK(rb.basis.empty());
}

TEST_CASE("negative dilation range is the span of (-1, 1)") {
  const RangeBasis rb = range_basis(controllability_matrix(dilation_negative()));
  CHECK(rb.rank == 1);
  REQUIRE(rb.basis.size() == 1);
  CHECK(rb.basis[0](0) == Rational(-1));
  CHECK(rb.basis[0](1) == Rational(1));
}

TEST_CASE("elimination rank agrees with brute-force minors") {
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> dim(1, 4);
    RationalMatrix M(dim(rng), dim(rng));
    for (Eigen::Index i = 0; i < M.rows(); ++i)
      for (Eigen::Index j = 0; j < M.cols(); ++j)
        M(i, j) = std::bernoulli_distribution(0.6)(rng)
                      ? random_nonzero_rational(rng)
                      : Rational(0);
    CHECK(range_basis(M).rank == rank_by_minors(M));
  }
}

TEST_CASE("rank never exceeds n and survives positive input rescaling") {
  Rng rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    LinearSystem sys = random_system(rng, 4, 2);
    const auto rank0 = range_basis(controllability_matrix(sys)).rank;
    CHECK(rank0 <= 4);
    for (int j = 0; j < 2; ++j)
      sys.B.col(j) *= random_positive_rational(rng);
    CHECK(range_basis(controllability_matrix(sys)).rank == rank0);
  }
}

TEST_CASE("positive-system detection") {
  CHECK(is_positive_system(dilation_positive()));
  CHECK_FALSE(is_positive_system(example_system()));  // B(1,2) = -2
  CHECK(is_positive_system(
      LinearSystem{mat({{-5, 2}, {0, -1}}), mat({{1}, {0}})}));
  CHECK_FALSE(is_positive_system(
      LinearSystem{mat({{0, -1}, {0, 0}}), mat({{1}, {1}})}));
}
