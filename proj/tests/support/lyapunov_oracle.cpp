// SPDX-License-Identifier: Apache-2.0
#include "lyapunov_oracle.hpp"

#include <cmath>

#include "trio/errors.hpp"

namespace trio::testing {

namespace {

// 16-point Gauss-Legendre nodes and weights on [0, 1].
constexpr int kGaussN = 16;
constexpr double kGauss[kGaussN][2] = {
    {0.0052995325041750307, 0.013576229705877019},
    {0.0277124884633837, 0.031126761969323853},
    {0.067184398806084122, 0.047579255841246296},
    {0.1222977958224985, 0.062314485627767015},
    {0.19106187779867811, 0.074797994408288382},
    {0.27099161117138632, 0.08457825969750131},
    {0.35919822461037054, 0.091301707522461806},
    {0.45249374508118129, 0.094725305227534293},
    {0.54750625491881877, 0.094725305227534293},
    {0.64080177538962946, 0.091301707522461806},
    {0.72900838882861363, 0.08457825969750131},
    {0.80893812220132189, 0.074797994408288382},
    {0.87770220417750155, 0.062314485627767015},
    {0.93281560119391593, 0.047579255841246296},
    {0.9722875115366163, 0.031126761969323853},
    {0.99470046749582497, 0.013576229705877019},
};

double inf_norm(const Eigen::MatrixXd& a) {
  return a.cwiseAbs().rowwise().sum().maxCoeff();
}

}  // namespace

Eigen::MatrixXd oracle_expm(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  const double norm = inf_norm(a);
  int squarings = 0;
  if (norm > 0.25) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
  const Eigen::MatrixXd b = a / std::pow(2.0, squarings);

  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= 40; ++k) {
    term = (term * b / static_cast<double>(k)).eval();
    result += term;
    if (inf_norm(term) < 1e-18 * inf_norm(result)) break;
  }
  for (int s = 0; s < squarings; ++s) result = (result * result).eval();
  return result;
}

Matrix6 integrate_covariance(const Matrix6& drift, const Matrix6& diffusion, double rel_tol) {
  // Non-dimensionalize: the integral is invariant under (M, D) -> (M/s, D/s).
  const double s = drift.cwiseAbs().maxCoeff() > 0.0 ? drift.cwiseAbs().maxCoeff() : 1.0;
  const Eigen::MatrixXd m = drift / s;
  const Eigen::MatrixXd d = diffusion / s;

  const double h = 0.5 / std::max(1.0, inf_norm(m));
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(6, 6);
  for (const auto& node : kGauss) {
    const Eigen::MatrixXd e = oracle_expm(m * (node[0] * h));
    v += (node[1] * h) * e * d * e.transpose();
  }

  Eigen::MatrixXd propagator = oracle_expm(m * h);
  int quiet = 0;
  for (int iter = 0; iter < 200; ++iter) {
    const Eigen::MatrixXd increment = propagator * v * propagator.transpose();
    v += increment;
    propagator = (propagator * propagator).eval();
    const double vn = v.norm();
    if (increment.norm() <= rel_tol * (vn > 0.0 ? vn : 1.0)) {
      if (++quiet >= 2) return 0.5 * (v + v.transpose());
    } else {
      quiet = 0;
    }
  }
  throw Error("covariance quadrature did not converge (drift too close to marginal stability?)");
}

}  // namespace trio::testing
