#include "herd/synthesis.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

#include "herd/herdability.hpp"
#include "herd/linsys.hpp"

namespace herd {

namespace {

Eigen::MatrixXd pade_numerator_pair(const Eigen::MatrixXd& A,
                                    const std::vector<double>& b,
                                    Eigen::MatrixXd* V_out) {
  const Eigen::Index n = A.rows();
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd A2 = A * A;

  // Even/odd polynomial split: U = A * sum b_{2k+1} A^{2k}, V = sum b_{2k} A^{2k}.
  Eigen::MatrixXd even = b[0] * I;
  Eigen::MatrixXd odd = b[1] * I;
  Eigen::MatrixXd power = I;
  for (size_t k = 2; k < b.size(); k += 2) {
    power = power * A2;
    even += b[k] * power;
    if (k + 1 < b.size()) odd += b[k + 1] * power;
  }
  *V_out = even;
  return A * odd;
}

Eigen::MatrixXd pade13(const Eigen::MatrixXd& A) {
  static const double b[] = {64764752532480000.0, 32382376266240000.0,
                             7771770303897600.0,  1187353796428800.0,
                             129060195264000.0,   10559470521600.0,
                             670442572800.0,      33522128640.0,
                             1323241920.0,        40840800.0,
                             960960.0,            16380.0,
                             182.0,               1.0};
  const Eigen::Index n = A.rows();
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd A2 = A * A;
  const Eigen::MatrixXd A4 = A2 * A2;
  const Eigen::MatrixXd A6 = A2 * A4;
  const Eigen::MatrixXd U =
      A * (A6 * (b[13] * A6 + b[11] * A4 + b[9] * A2) + b[7] * A6 +
           b[5] * A4 + b[3] * A2 + b[1] * I);
  const Eigen::MatrixXd V = A6 * (b[12] * A6 + b[10] * A4 + b[8] * A2) +
                            b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * I;
  return (V - U).lu().solve(V + U);
}

}  // namespace

Eigen::MatrixXd expm(const Eigen::MatrixXd& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("expm needs square M");
  if (M.rows() == 0) return M;

  // Higham (2005) degree selection thresholds on the 1-norm.
  static const std::vector<std::pair<double, std::vector<double>>> low_order =
      {{1.495585217958292e-2, {120, 60, 12, 1}},
       {2.539398330063230e-1, {30240, 15120, 3360, 420, 30, 1}},
       {9.504178996162932e-1,
        {17297280, 8648640, 1995840, 277200, 25200, 1512, 56, 1}},
       {2.097847961257068,
        {17643225600, 8821612800, 2075673600, 302702400, 30270240, 2162160,
         110880, 3960, 90, 1}}};
  static const double theta13 = 5.371920351148152;

  const double norm = M.cwiseAbs().colwise().sum().maxCoeff();
  for (const auto& [theta, b] : low_order)
    if (norm <= theta) {
      Eigen::MatrixXd V;
      const Eigen::MatrixXd U = pade_numerator_pair(M, b, &V);
      return (V - U).lu().solve(V + U);
    }

  int squarings = 0;
  Eigen::MatrixXd scaled = M;
  if (norm > theta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / theta13)));
    scaled /= std::pow(2.0, squarings);
  }
  Eigen::MatrixXd result = pade13(scaled);
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

Eigen::MatrixXd reachability_gramian(const Eigen::MatrixXd& A,
                                     const Eigen::MatrixXd& B, double t_f,
                                     int steps) {
  if (t_f <= 0) throw std::invalid_argument("horizon must be positive");
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  const double dt = t_f / steps;
  const Eigen::MatrixXd E_dt = expm(A * dt);

  Eigen::MatrixXd E = Eigen::MatrixXd::Identity(A.rows(), A.cols());
  std::vector<Eigen::MatrixXd> F;
  F.reserve(steps + 1);
  for (int k = 0; k <= steps; ++k) {
    const Eigen::MatrixXd G = E * B;
    F.push_back(G * G.transpose());
    E = E_dt * E;
  }

  Eigen::MatrixXd W = Eigen::MatrixXd::Zero(A.rows(), A.cols());
  if (steps % 2 == 0 && steps >= 2) {
    // Composite Simpson on the uniform grid.
    W = F.front() + F.back();
    for (int k = 1; k < steps; ++k) W += (k % 2 ? 4.0 : 2.0) * F[k];
    W *= dt / 3.0;
  } else {
    W = 0.5 * (F.front() + F.back());
    for (int k = 1; k < steps; ++k) W += F[k];
    W *= dt;
  }
  return W;
}

SynthesisResult synthesize(const LinearSystem& sys, const std::set<int>& X,
                           const SynthesisConfig& cfg,
                           const RationalVector& witness) {
  validate_system(sys);
  if (X.empty()) throw std::invalid_argument("query set is empty");
  for (int i : X)
    if (i < 0 || i >= sys.n())
      throw std::invalid_argument("state index out of range");
  if (cfg.threshold < 0)
    throw std::invalid_argument("threshold must be nonnegative");
  if (cfg.horizon <= 0) throw std::invalid_argument("horizon must be positive");
  if (cfg.steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (cfg.margin <= 0) throw std::invalid_argument("margin must be positive");
  const Eigen::Index n = sys.n(), m = sys.m();
  Eigen::VectorXd x0 = cfg.x0;
  if (x0.size() == 0) x0 = Eigen::VectorXd::Zero(n);
  if (x0.size() != n) throw std::invalid_argument("x0 has the wrong size");

  const ControllabilityMatrix cm = controllability_matrix(sys);
  if (witness.size() != cm.C.cols())
    throw std::invalid_argument("witness has the wrong size");
  const RationalVector k_exact = cm.C * witness;
  double min_target = std::numeric_limits<double>::infinity();
  for (int i : X) {
    if (k_exact(i) < 1)
      throw std::invalid_argument(
          "witness does not certify the set: (C alpha)_i < 1 on X");
    min_target = std::min(min_target, k_exact(i).get_d());
  }

  const Eigen::MatrixXd A = to_double(sys.A);
  const Eigen::MatrixXd B = to_double(sys.B);
  const double t_f = cfg.horizon;

  SynthesisResult result;

  // gamma from the scaling bound: any gamma above
  // max_j (h - (e^{A tf} x0)_j) / min_X (C alpha) clears the threshold.
  const Eigen::VectorXd drift = expm(A * t_f) * x0;
  const double raw_bound = (cfg.threshold - drift.array()).maxCoeff() /
                           min_target;
  result.gamma = cfg.margin * std::max(raw_bound, 1.0);

  Eigen::VectorXd k_target(n);
  for (Eigen::Index i = 0; i < n; ++i)
    k_target(i) = result.gamma * k_exact(i).get_d();

  const Eigen::MatrixXd W = reachability_gramian(A, B, t_f, cfg.steps);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      W, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double cutoff = 1e-12 * svd.singularValues().maxCoeff();
  Eigen::VectorXd inv_sigma = Eigen::VectorXd::Zero(svd.singularValues().size());
  Eigen::Index retained = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > cutoff) {
      inv_sigma(i) = 1.0 / svd.singularValues()(i);
      ++retained;
    }
  const Eigen::VectorXd p =
      svd.matrixV() * inv_sigma.asDiagonal() * svd.matrixU().transpose() *
      k_target;

  // Residual of the target outside the retained range signals that the
  // pseudo-inverse truncation bit into directions the steering needs.
  const Eigen::VectorXd projected =
      svd.matrixU().leftCols(retained) *
      (svd.matrixU().leftCols(retained).transpose() * k_target);
  if ((projected - k_target).norm() >
      1e-9 * std::max(1.0, k_target.norm()))
    result.warnings.push_back(
        "degraded accuracy: Gramian pseudo-inversion truncated directions "
        "required by the steering target");

  const Eigen::MatrixXd At = A.transpose();
  const auto control = [At, B, p, t_f](double t) -> Eigen::VectorXd {
    return B.transpose() * (expm(At * (t_f - t)) * p);
  };

  result.trajectory = integrate_rk4(A, B, control, x0, t_f, cfg.steps);
  result.input_samples.resize(cfg.steps + 1, m);
  const double dt = t_f / cfg.steps;
  for (int k = 0; k <= cfg.steps; ++k)
    result.input_samples.row(k) = control(k * dt).transpose();

  result.success = true;
  const double tolerance = 1e-6 * std::max(1.0, cfg.threshold);
  for (int i : X) {
    result.achieved[i] = result.trajectory(cfg.steps, i);
    if (result.achieved[i] < cfg.threshold - tolerance) result.success = false;
  }
  return result;
}

Eigen::MatrixXd integrate_rk4(const Eigen::MatrixXd& A,
                              const Eigen::MatrixXd& B,
                              const std::function<Eigen::VectorXd(double)>& u,
                              const Eigen::VectorXd& x0, double t_f,
                              int steps) {
  if (t_f <= 0) throw std::invalid_argument("horizon must be positive");
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  const double dt = t_f / steps;
  Eigen::MatrixXd trajectory(steps + 1, x0.size());
  Eigen::VectorXd x = x0;
  trajectory.row(0) = x.transpose();
  for (int k = 0; k < steps; ++k) {
    const double t = k * dt;
    const Eigen::VectorXd u1 = u(t);
    const Eigen::VectorXd u2 = u(t + 0.5 * dt);
    const Eigen::VectorXd u4 = u(t + dt);
    const Eigen::VectorXd f1 = A * x + B * u1;
    const Eigen::VectorXd f2 = A * (x + 0.5 * dt * f1) + B * u2;
    const Eigen::VectorXd f3 = A * (x + 0.5 * dt * f2) + B * u2;
    const Eigen::VectorXd f4 = A * (x + dt * f3) + B * u4;
    x += dt / 6.0 * (f1 + 2.0 * f2 + 2.0 * f3 + f4);
    trajectory.row(k + 1) = x.transpose();
  }
  return trajectory;
}

SynthesisResult synthesize(const LinearSystem& sys, const std::set<int>& X,
                           const SynthesisConfig& cfg) {
  const ControllabilityMatrix cm = controllability_matrix(sys);
  const HerdabilityVerdict verdict = check_set(cm, X);
  if (!verdict.herdable)
    throw std::invalid_argument(
        "the queried set is not herdable; no steering input exists");
  return synthesize(sys, X, cfg, *verdict.witness);
}

}  // namespace herd
