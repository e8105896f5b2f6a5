#pragma once

#include "herd/matrix.hpp"

namespace herd {

/// Outcome of the exact feasibility question "does M x >= 1 have a
/// solution x (free sign)?". Exactly one of `solution` / `farkas` is
/// meaningful: a feasible instance carries x with M x >= 1 entrywise, an
/// infeasible one carries y >= 0, y != 0 with yT M = 0 (so yT(Mx) = 0 can
/// never reach yT 1 > 0). The certificate is scaled to coprime integers.
struct FeasibilityResult {
  bool feasible = false;
  RationalVector solution;
  RationalVector farkas;
  int pivots = 0;
};

/// Phase-1 simplex over exact rationals with Bland's rule; deterministic
/// and terminating. M may have any shape with at least one row and column.
FeasibilityResult solve_ge_ones(const RationalMatrix& M);

}  // namespace herd
