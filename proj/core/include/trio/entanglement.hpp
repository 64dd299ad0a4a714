// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "trio/dynamics.hpp"

namespace trio {

using Matrix4 = Eigen::Matrix<double, 4, 4>;

/// Bipartite cuts of the three-mode state. Extraction keeps the global
/// (q, p, q, p) ordering, so the acoustic mode comes first whenever it is
/// part of the pair.
enum class ModePair { tem00_acoustic, tem01_acoustic, tem00_tem01 };

/// 4x4 covariance of the selected pair.
Matrix4 submatrix(const CovarianceMatrix& v, ModePair pair);

/// Flips the sign of the selected mode's momentum row and column
/// (time reversal of one subsystem). Involution. `mode` indexes the
/// (q, p) pairs of an arbitrary 2n x 2n covariance.
Eigen::MatrixXd partial_transpose(const Eigen::MatrixXd& v, int mode);

/// Logarithmic negativity E_N = max[0, -ln 2 sigma_-] of a two-mode
/// covariance, with
///   sigma_- = sqrt((Sigma - sqrt(Sigma^2 - 4 det V)) / 2),
///   Sigma   = det A + det B - 2 det C
/// for blocks V = [A C; C^T B]; the -2 det C already encodes the partial
/// transpose. Evaluated in the cancellation-free conjugate form
/// sigma_-^2 = 2 det V / (Sigma + sqrt(Sigma^2 - 4 det V)). A discriminant
/// that is negative within -1e-12 (relative) is clamped to zero, which
/// yields E_N = 0 for physical inputs rather than an error.
/// Throws UnphysicalCovarianceError if v_sub + (i/2)J has an eigenvalue
/// below -1e-9.
double log_negativity(const Matrix4& v_sub);

/// Symplectic spectrum of a 2n x 2n covariance: the absolute values of the
/// eigenvalues of J V, which come in +/- i nu pairs; returned as the n
/// pairwise magnitudes, ascending.
std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& v);

/// Separability test across one mode vs the rest, by partial transposition.
struct TripartiteResult {
  double min_symplectic = 0.0;  ///< smallest symplectic eigenvalue of V_pt
  bool entangled = false;       ///< min_symplectic < 1/2 - 1e-9
  std::array<double, 3> symplectic{};      ///< full PT symplectic spectrum, ascending
  std::array<double, 6> raw_eigenvalues{}; ///< ordinary spectrum of V_pt, ascending
};

/// Default split: acoustic | (TEM00, TEM01). The raw matrix eigenvalues are
/// reported for reference; V_pt of a positive-definite V is itself positive
/// definite, so only the symplectic test can certify entanglement and only
/// it drives the boolean.
TripartiteResult tripartite_ppt(const CovarianceMatrix& v,
                                Mode transposed = Mode::acoustic);

/// Figures of merit for all three pairs plus the acoustic-split PPT test.
struct EntanglementReport {
  double en_0m = 0.0;  ///< E_N, TEM00 vs acoustic
  double en_1m = 0.0;  ///< E_N, TEM01 vs acoustic
  double en_01 = 0.0;  ///< E_N, TEM00 vs TEM01
  double tripartite_min_symplectic = 0.0;
};

/// Throws UnphysicalCovarianceError when !v.physical().
EntanglementReport entanglement_report(const CovarianceMatrix& v);

}  // namespace trio
