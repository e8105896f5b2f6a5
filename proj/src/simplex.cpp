#include "herd/simplex.hpp"

#include <stdexcept>

namespace herd {

namespace {

// Scales a nonnegative rational vector to coprime integers.
RationalVector canonical_integer_form(const RationalVector& y) {
  Integer scale(1);
  for (Eigen::Index i = 0; i < y.size(); ++i)
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), y(i).get_den().get_mpz_t());
  Integer common(0);
  RationalVector out(y.size());
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    Rational v = y(i) * Rational(scale);
    v.canonicalize();
    out(i) = v;
    mpz_gcd(common.get_mpz_t(), common.get_mpz_t(), v.get_num().get_mpz_t());
  }
  if (common > 1)
    for (Eigen::Index i = 0; i < y.size(); ++i) {
      out(i) /= Rational(common);
      out(i).canonicalize();
    }
  return out;
}

}  // namespace

FeasibilityResult solve_ge_ones(const RationalMatrix& M) {
  const Eigen::Index p = M.rows(), q = M.cols();
  if (p < 1 || q < 1)
    throw std::invalid_argument("feasibility system needs rows and columns");

  // Phase-1 tableau for  M x+ - M x- - s + a = 1,  min sum(a).
  // Columns: [0,q) x+, [q,2q) x-, [2q,2q+p) slack, [2q+p,2q+2p) artificial.
  const Eigen::Index total = 2 * q + 2 * p;
  const Eigen::Index rhs = total;
  RationalMatrix T = RationalMatrix::Zero(p + 1, total + 1);
  for (Eigen::Index i = 0; i < p; ++i) {
    for (Eigen::Index j = 0; j < q; ++j) {
      T(i, j) = M(i, j);
      T(i, q + j) = -M(i, j);
    }
    T(i, 2 * q + i) = -1;
    T(i, 2 * q + p + i) = 1;
    T(i, rhs) = 1;
  }
  // Objective row: reduced costs under the all-artificial basis.
  for (Eigen::Index j = 0; j <= total; ++j) {
    Rational sum(0);
    for (Eigen::Index i = 0; i < p; ++i) sum += T(i, j);
    T(p, j) = (j >= 2 * q + p && j < total ? Rational(1) : Rational(0)) - sum;
  }

  std::vector<Eigen::Index> basis(p);
  for (Eigen::Index i = 0; i < p; ++i) basis[i] = 2 * q + p + i;

  FeasibilityResult result;
  const long max_pivots = 200000;
  while (true) {
    if (T(p, rhs) == 0) break;  // all artificials driven to zero

    // Bland's rule: smallest-index structural or slack column that improves.
    Eigen::Index entering = -1;
    for (Eigen::Index j = 0; j < 2 * q + p; ++j)
      if (T(p, j) < 0) {
        entering = j;
        break;
      }
    if (entering < 0) break;  // optimal with positive infeasibility

    Eigen::Index leaving = -1;
    Rational best_ratio;
    for (Eigen::Index i = 0; i < p; ++i) {
      if (T(i, entering) <= 0) continue;
      Rational ratio = T(i, rhs) / T(i, entering);
      ratio.canonicalize();
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving < 0)
      throw std::logic_error("phase-1 objective cannot be unbounded");

    const Rational pivot = T(leaving, entering);
    T.row(leaving) /= pivot;
    for (Eigen::Index i = 0; i <= p; ++i) {
      if (i == leaving || T(i, entering) == 0) continue;
      const Rational factor = T(i, entering);
      T.row(i) -= factor * T.row(leaving);
    }
    basis[leaving] = entering;
    if (++result.pivots > max_pivots)
      throw std::logic_error("simplex pivot limit exceeded");
  }

  if (T(p, rhs) == 0) {
    result.feasible = true;
    result.solution = RationalVector::Zero(q);
    for (Eigen::Index i = 0; i < p; ++i) {
      if (basis[i] < q)
        result.solution(basis[i]) += T(i, rhs);
      else if (basis[i] < 2 * q)
        result.solution(basis[i] - q) -= T(i, rhs);
    }
    for (Eigen::Index j = 0; j < q; ++j) result.solution(j).canonicalize();
    return result;
  }

  // Farkas dual read off the slack columns: redcost(s_i) = y_i, which the
  // stopping criterion keeps nonnegative.
  RationalVector y(p);
  bool any_nonzero = false;
  for (Eigen::Index i = 0; i < p; ++i) {
    y(i) = T(p, 2 * q + i);
    y(i).canonicalize();
    if (y(i) < 0)
      throw std::logic_error("negative Farkas multiplier at optimality");
    any_nonzero = any_nonzero || y(i) != 0;
  }
  if (!any_nonzero)
    throw std::logic_error("zero Farkas certificate at optimality");
  result.feasible = false;
  result.farkas = canonical_integer_form(y);
  return result;
}

}  // namespace herd
