#pragma once

#include <Eigen/Core>

#include "herd/rational.hpp"

namespace herd {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IntegerMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Derived>
Eigen::Index nnz(const Eigen::MatrixBase<Derived>& m) {
  Eigen::Index count = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != typename Derived::Scalar(0)) ++count;
  return count;
}

/// True when all nonzero entries share one sign. A zero vector is unisigned.
template <typename Derived>
bool is_unisigned(const Eigen::MatrixBase<Derived>& v) {
  int seen = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const int s = sgn(v(i));
    if (s == 0) continue;
    if (seen == 0)
      seen = s;
    else if (seen != s)
      return false;
  }
  return true;
}

inline Eigen::MatrixXd to_double(const RationalMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, j) = m(i, j).get_d();
  return out;
}

inline Eigen::VectorXd to_double(const RationalVector& v) {
  Eigen::VectorXd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i).get_d();
  return out;
}

}  // namespace herd
