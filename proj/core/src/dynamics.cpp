// SPDX-License-Identifier: Apache-2.0
#include "trio/dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "trio/errors.hpp"

namespace trio {

namespace {

// Conditioning scale for the solve: omega_m sits at drift(0,1) by
// construction; fall back to the largest entry for hand-built models.
double drift_scale(const Matrix6& m) {
  const double wm = m(0, 1);
  if (wm > 0.0 && std::isfinite(wm)) return wm;
  const double mx = m.cwiseAbs().maxCoeff();
  return mx > 0.0 ? mx : 1.0;
}

}  // namespace

LinearModel build_model(const DerivedParams& d, const Detunings& det, DMode d_mode) {
  LinearModel m;
  const double g_q0 = d.g0 * d.q_bar_0;
  const double g_q1 = d.g0 * d.q_bar_1;

  Matrix6& M = m.drift;
  M(0, 1) = d.omega_m;
  M(1, 0) = -d.omega_m;
  M(1, 1) = -d.gamma_m;
  M(1, 2) = g_q1;
  M(1, 4) = g_q0;
  M(2, 2) = -d.gamma_0;
  M(2, 3) = det.delta_0;
  M(3, 0) = g_q1;
  M(3, 2) = -det.delta_0;
  M(3, 3) = -d.gamma_0;
  M(4, 4) = -d.gamma_1;
  M(4, 5) = det.delta_1;
  M(5, 0) = g_q0;
  M(5, 4) = -det.delta_1;
  M(5, 5) = -d.gamma_1;

  const double thermal = d_mode == DMode::paper
                             ? 2.0 * d.gamma_m * d.thermal_quanta
                             : 2.0 * d.gamma_m * (d.n_th + 0.5);
  m.diffusion.diagonal() << 0.0, thermal, d.gamma_0, d.gamma_0, d.gamma_1, d.gamma_1;
  return m;
}

StabilityResult stability(const LinearModel& m) {
  const double s = drift_scale(m.drift);
  Eigen::EigenSolver<Matrix6> solver(m.drift / s, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw EigenSolverError("eigenvalue iteration did not converge on the drift matrix");

  StabilityResult r;
  for (int i = 0; i < 6; ++i) r.eigenvalues[i] = solver.eigenvalues()(i) * s;
  std::sort(r.eigenvalues.begin(), r.eigenvalues.end(),
            [](const std::complex<double>& a, const std::complex<double>& b) {
              if (a.real() != b.real()) return a.real() > b.real();
              return a.imag() > b.imag();
            });
  r.max_real_part = r.eigenvalues[0].real();
  const double norm = m.drift.cwiseAbs().rowwise().sum().maxCoeff();  // inf-norm
  r.stable = r.max_real_part < -1e-9 * norm;
  return r;
}

Eigen::MatrixXd symplectic_form(int n_modes) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    j(2 * k, 2 * k + 1) = 1.0;
    j(2 * k + 1, 2 * k) = -1.0;
  }
  return j;
}

CovarianceMatrix::CovarianceMatrix(const Matrix6& v) : v_(0.5 * (v + v.transpose())) {
  using Cplx = std::complex<double>;
  Eigen::Matrix<Cplx, 6, 6> h = v_.cast<Cplx>();
  const Eigen::MatrixXd j = symplectic_form(3);
  h += Cplx(0.0, 0.5) * j.cast<Cplx>();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<Cplx, 6, 6>> es(h, Eigen::EigenvaluesOnly);
  min_eig_ = es.eigenvalues().minCoeff();
}

CovarianceMatrix steady_covariance(const LinearModel& m) {
  const StabilityResult st = stability(m);
  if (!st.stable) {
    std::ostringstream msg;
    msg << "drift matrix is not stable (max eigenvalue real part " << st.max_real_part
        << " 1/s); no stationary covariance exists";
    throw UnstableSystemError(msg.str());
  }

  const double s = drift_scale(m.drift);
  const Matrix6 ms = m.drift / s;
  const Matrix6 ds = m.diffusion / s;

  // (I (x) M + M (x) I) vec(V) = -vec(D), column-major vec.
  Eigen::Matrix<double, 36, 36> k = Eigen::Matrix<double, 36, 36>::Zero();
  for (int col = 0; col < 6; ++col) k.block<6, 6>(6 * col, 6 * col) = ms;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      k.block<6, 6>(6 * i, 6 * j) += ms(i, j) * Matrix6::Identity();

  Eigen::Matrix<double, 36, 1> rhs;
  rhs = -Eigen::Map<const Eigen::Matrix<double, 36, 1>>(ds.data());

  Eigen::PartialPivLU<Eigen::Matrix<double, 36, 36>> lu(k);
  const auto u_diag = lu.matrixLU().diagonal().cwiseAbs();
  if (u_diag.minCoeff() <= 1e-13 * u_diag.maxCoeff())
    throw SingularSystemError(
        "Lyapunov operator is numerically rank-deficient (a drift eigenvalue pair sums to ~0)");
  const Eigen::Matrix<double, 36, 1> x = lu.solve(rhs);

  Matrix6 v = Eigen::Map<const Matrix6>(x.data());
  v = 0.5 * (v + v.transpose()).eval();

  const Matrix6 residual = m.drift * v + v * m.drift.transpose() + m.diffusion;
  const auto inf_norm = [](const Matrix6& a) { return a.cwiseAbs().rowwise().sum().maxCoeff(); };
  const double bound = 1e-8 * (inf_norm(m.drift) * inf_norm(v) + inf_norm(m.diffusion));
  if (inf_norm(residual) > bound)
    throw SingularSystemError("Lyapunov residual exceeds its backward-stability bound");

  return CovarianceMatrix(v);
}

double acoustic_occupation(const CovarianceMatrix& v) {
  return 0.5 * (v(0, 0) + v(1, 1) - 1.0);
}

}  // namespace trio
