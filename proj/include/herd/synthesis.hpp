#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "herd/linear_system.hpp"
#include "herd/matrix.hpp"

namespace herd {

/// Configuration for the open-loop steering demonstration. This is the only
/// floating-point corner of the library.
struct SynthesisConfig {
  double threshold = 0.0;  // h >= 0
  double horizon = 1.0;    // t_f > 0
  int steps = 1000;        // grid intervals, >= 1
  double margin = 2.0;     // multiplier on the gamma scaling bound
  Eigen::VectorXd x0;      // initial state; defaults to zeros
};

struct SynthesisResult {
  /// u sampled at every grid point t_k = k * t_f / steps, (steps+1) x m.
  Eigen::MatrixXd input_samples;
  /// States at every grid point, (steps+1) x n.
  Eigen::MatrixXd trajectory;
  /// Final value per queried state (0-based index).
  std::map<int, double> achieved;
  bool success = false;
  double gamma = 0.0;
  std::vector<std::string> warnings;
};

/// Scaling-and-squaring Pade approximant of e^M (Higham 2005 degree
/// selection, target accuracy near machine precision).
Eigen::MatrixXd expm(const Eigen::MatrixXd& M);

/// Finite-horizon reachability Gramian int_0^{tf} e^{As} B BT e^{ATs} ds by
/// composite quadrature on the uniform grid (Simpson when steps is even).
Eigen::MatrixXd reachability_gramian(const Eigen::MatrixXd& A,
                                     const Eigen::MatrixXd& B, double t_f,
                                     int steps);

/// Classical RK4 for x' = Ax + B u(t) on a uniform grid; returns the
/// (steps+1) x n trajectory including the initial state.
Eigen::MatrixXd integrate_rk4(const Eigen::MatrixXd& A,
                              const Eigen::MatrixXd& B,
                              const std::function<Eigen::VectorXd(double)>& u,
                              const Eigen::VectorXd& x0, double t_f,
                              int steps);

/// Builds the minimum-energy open-loop input that drives the states in X
/// above cfg.threshold by time cfg.horizon and integrates the closed
/// trajectory with classical RK4. The witness must satisfy
/// (C witness)_i >= 1 on X (as produced by check_set); gamma is chosen from
/// the scaling bound so the target clears the threshold with margin.
SynthesisResult synthesize(const LinearSystem& sys, const std::set<int>& X,
                           const SynthesisConfig& cfg,
                           const RationalVector& witness);

/// Convenience overload: runs check_set internally and throws
/// std::invalid_argument when X is not herdable.
SynthesisResult synthesize(const LinearSystem& sys, const std::set<int>& X,
                           const SynthesisConfig& cfg);

}  // namespace herd
