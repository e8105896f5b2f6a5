#pragma once

#include "herd/matrix.hpp"

namespace herd {

/// Continuous-time LTI pair (A, B) for x' = Ax + Bu, stored exactly.
struct LinearSystem {
  RationalMatrix A;  // n x n
  RationalMatrix B;  // n x m, m >= 1

  Eigen::Index n() const { return A.rows(); }
  Eigen::Index m() const { return B.cols(); }
};

/// Throws std::invalid_argument unless A is square, B.rows == A.rows and
/// B has at least one column.
void validate_system(const LinearSystem& sys);

}  // namespace herd
