// SPDX-License-Identifier: Apache-2.0
#include "trio/entanglement.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "trio/errors.hpp"

namespace trio {

namespace {

// Uncertainty-relation check for an n-mode covariance: smallest eigenvalue
// of V + (i/2)J must be >= -1e-9.
double min_uncertainty_eig(const Eigen::MatrixXd& v) {
  using Cplx = std::complex<double>;
  const int n = static_cast<int>(v.rows());
  Eigen::MatrixXcd h = v.cast<Cplx>();
  h += Cplx(0.0, 0.5) * symplectic_form(n / 2).cast<Cplx>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace

Matrix4 submatrix(const CovarianceMatrix& v, ModePair pair) {
  // Mode order inside the pair follows the global ordering, acoustic first.
  int a = 0, b = 0;
  switch (pair) {
    case ModePair::tem00_acoustic: a = 0; b = 1; break;
    case ModePair::tem01_acoustic: a = 0; b = 2; break;
    case ModePair::tem00_tem01:    a = 1; b = 2; break;
    default: throw Error("invalid mode pair");
  }
  Matrix4 out;
  const int rows[4] = {2 * a, 2 * a + 1, 2 * b, 2 * b + 1};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = v(rows[i], rows[j]);
  return out;
}

Eigen::MatrixXd partial_transpose(const Eigen::MatrixXd& v, int mode) {
  if (v.rows() != v.cols() || v.rows() % 2 != 0)
    throw Error("covariance must be square with (q, p) pairing");
  const int n_modes = static_cast<int>(v.rows()) / 2;
  if (mode < 0 || mode >= n_modes) throw Error("mode index out of range");
  Eigen::MatrixXd out = v;
  const int p = 2 * mode + 1;
  out.row(p) *= -1.0;
  out.col(p) *= -1.0;
  return out;
}

double log_negativity(const Matrix4& v_sub) {
  if (min_uncertainty_eig(v_sub) < -1e-9)
    throw UnphysicalCovarianceError("two-mode covariance violates the uncertainty relation");

  const double det_a = v_sub.block<2, 2>(0, 0).determinant();
  const double det_b = v_sub.block<2, 2>(2, 2).determinant();
  const double det_c = v_sub.block<2, 2>(0, 2).determinant();
  // LU-based 4x4 determinant: the cofactor formula cancels catastrophically
  // at large squeezing.
  const double det_v = v_sub.partialPivLu().determinant();
  const double sigma = det_a + det_b - 2.0 * det_c;

  double disc = sigma * sigma - 4.0 * det_v;
  if (disc < 0.0) {
    if (disc < -1e-12 * std::max(1.0, sigma * sigma))
      throw UnphysicalCovarianceError("negative discriminant in the symplectic eigenvalue formula");
    disc = 0.0;
  }
  // Conjugate form of (Sigma - sqrt(disc))/2: immune to the cancellation
  // that dominates at large squeezing.
  const double denom = sigma + std::sqrt(disc);
  if (denom <= 0.0 || det_v <= 0.0)
    throw UnphysicalCovarianceError("two-mode covariance is not positive definite");
  const double sigma_minus_sq = 2.0 * det_v / denom;
  return std::max(0.0, -0.5 * std::log(4.0 * sigma_minus_sq));
}

std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& v) {
  if (v.rows() != v.cols() || v.rows() % 2 != 0)
    throw Error("covariance must be square with (q, p) pairing");
  const int n = static_cast<int>(v.rows()) / 2;
  const Eigen::MatrixXd jv = symplectic_form(n) * v;
  Eigen::EigenSolver<Eigen::MatrixXd> es(jv, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw EigenSolverError("eigenvalue iteration did not converge on J*V");
  std::vector<double> mags(2 * n);
  for (int i = 0; i < 2 * n; ++i) mags[i] = std::abs(es.eigenvalues()(i));
  std::sort(mags.begin(), mags.end());
  // Eigenvalues come in +/- i nu pairs; average each pair.
  std::vector<double> nu(n);
  for (int k = 0; k < n; ++k) nu[k] = 0.5 * (mags[2 * k] + mags[2 * k + 1]);
  return nu;
}

TripartiteResult tripartite_ppt(const CovarianceMatrix& v, Mode transposed) {
  if (!v.physical())
    throw UnphysicalCovarianceError("covariance violates the uncertainty relation");
  const Eigen::MatrixXd v_pt = partial_transpose(v.matrix(), static_cast<int>(transposed));

  TripartiteResult r;
  const auto nu = symplectic_eigenvalues(v_pt);
  std::copy(nu.begin(), nu.end(), r.symplectic.begin());
  r.min_symplectic = nu.front();
  r.entangled = r.min_symplectic < 0.5 - 1e-9;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(v_pt, Eigen::EigenvaluesOnly);
  for (int i = 0; i < 6; ++i) r.raw_eigenvalues[i] = es.eigenvalues()(i);
  return r;
}

EntanglementReport entanglement_report(const CovarianceMatrix& v) {
  if (!v.physical())
    throw UnphysicalCovarianceError("covariance violates the uncertainty relation");
  EntanglementReport r;
  r.en_0m = log_negativity(submatrix(v, ModePair::tem00_acoustic));
  r.en_1m = log_negativity(submatrix(v, ModePair::tem01_acoustic));
  r.en_01 = log_negativity(submatrix(v, ModePair::tem00_tem01));
  r.tripartite_min_symplectic = tripartite_ppt(v).min_symplectic;
  return r;
}

}  // namespace trio
