// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "trio/model.hpp"

namespace trio {

using Matrix6 = Eigen::Matrix<double, 6, 6>;

/// State ordering of the linearized model, fixed everywhere:
/// (dq_m, dp_m, dq_0, dp_0, dq_1, dp_1).
inline constexpr std::array<const char*, 6> kStateNames = {
    "dq_m", "dp_m", "dq_0", "dp_0", "dq_1", "dp_1"};

/// Mode indices into the 6x6 state: each mode occupies rows 2k, 2k+1.
enum class Mode : int { acoustic = 0, tem00 = 1, tem01 = 2 };

/// Thermal entry of the diffusion matrix.
///  - paper: 2 gamma_m kB T/(hbar omega_m), the classical-equipartition form.
///    Vanishes at T = 0 and omits the zero-point 1/2 (the resulting V can
///    violate the uncertainty relation below ~1 K; see
///    CovarianceMatrix::physical()).
///  - zero_point: 2 gamma_m (n_th + 1/2), finite at T = 0.
enum class DMode { paper, zero_point };

/// Laser detunings of the two cavity modes in the rotating frame.
struct Detunings {
  double delta_0 = 0.0;  ///< omega_0 - omega_L [rad/s]
  double delta_1 = 0.0;  ///< omega_1 - omega_L = delta_0 + mode_gap [rad/s]
};

inline Detunings detunings_of(const PhysicalParams& p) {
  return {p.detuning_00, p.detuning_00 + p.mode_gap};
}

/// Linearized quantum-Langevin model x' = M x + n with white noise
/// correlator D. Drift rows follow kStateNames ordering:
///   row 1: (0, wm, 0, 0, 0, 0)
///   row 2: (-wm, -gm, G0 qb1, 0, G0 qb0, 0)
///   rows 3-4: TEM00 block (-g0, d0) with coupling G0 qb1 at (4,1)
///   rows 5-6: TEM01 block (-g1, d1) with coupling G0 qb0 at (6,1)
/// Diffusion is diagonal: diag(0, thermal, g0, g0, g1, g1).
struct LinearModel {
  Matrix6 drift = Matrix6::Zero();
  Matrix6 diffusion = Matrix6::Zero();
};

/// Assembles drift and diffusion from derived constants.
LinearModel build_model(const DerivedParams& d, const Detunings& det,
                        DMode d_mode = DMode::paper);

inline LinearModel build_model(const DerivedParams& d, const PhysicalParams& p,
                               DMode d_mode = DMode::paper) {
  return build_model(d, detunings_of(p), d_mode);
}

/// Eigenvalue stability report. `stable` holds iff every eigenvalue real
/// part is below -1e-9 * ||M||_inf (relative tolerance: drift entries span
/// many orders of magnitude in SI units). Eigenvalues are sorted by real
/// part descending, ties broken by imaginary part descending.
struct StabilityResult {
  bool stable = false;
  double max_real_part = 0.0;  ///< [1/s]
  std::array<std::complex<double>, 6> eigenvalues{};
};

/// Throws EigenSolverError if the QR iteration fails to converge.
StabilityResult stability(const LinearModel& m);

/// Stationary symmetric covariance of the six quadratures, same ordering
/// as LinearModel. Symmetrized on construction. `physical()` reports
/// whether V + (i/2)J >= -1e-9, with J the block-diagonal symplectic form
/// diag[(0,1;-1,0), ...]; paper-mode diffusion at low temperature produces
/// stationary solutions that genuinely fail this test, so the flag is
/// recorded rather than enforced.
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(const Matrix6& v);

  const Matrix6& matrix() const { return v_; }
  double operator()(int i, int j) const { return v_(i, j); }

  /// Smallest eigenvalue of the Hermitian matrix V + (i/2)J.
  double min_uncertainty_eig() const { return min_eig_; }
  bool physical() const { return min_eig_ >= -1e-9; }

 private:
  Matrix6 v_;
  double min_eig_;
};

/// 2n x 2n symplectic form with 2x2 blocks (0, 1; -1, 0).
Eigen::MatrixXd symplectic_form(int n_modes);

/// Solves M V + V M^T = -D for the stationary covariance by LU on the
/// 36x36 Kronecker system (I (x) M + M (x) I) vec(V) = -vec(D). The drift
/// is non-dimensionalized by omega_m before assembly to condition the
/// solve; the solution is scale-invariant. Postcondition (checked):
/// ||M V + V M^T + D||_inf <= 1e-8 (||M|| ||V|| + ||D||).
/// Throws UnstableSystemError if stability(m) fails and SingularSystemError
/// if the Kronecker operator is numerically rank-deficient.
CovarianceMatrix steady_covariance(const LinearModel& m);

/// Mean phonon number of the acoustic mode: (V11 + V22 - 1)/2, i.e. the
/// symmetrized variances minus the zero-point 1/2.
double acoustic_occupation(const CovarianceMatrix& v);

}  // namespace trio
