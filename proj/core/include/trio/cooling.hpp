// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <optional>

#include "trio/model.hpp"

namespace trio {

/// Signed parametric gain R of the three-mode interaction, for the cooling
/// configuration (TEM00 driven on resonance, detuning_00 = 0). Two algebraic
/// routes are evaluated and cross-checked to 1e-9 relative:
///   |R| = G0^2 a_bar^2 / (gamma_1 gamma_m)
///       = 2 Lambda I0 omega_1 / (m omega_m L^2 gamma_0 gamma_1 gamma_m).
/// The sign follows the resonant sideband: mode_gap > 0 (anti-Stokes) gives
/// negative gain (cooling), mode_gap < 0 positive gain, mode_gap = 0 zero.
double parametric_gain(const PhysicalParams& p, const DerivedParams& d);

/// Radiation-pressure-modified oscillator parameters at Omega = omega_m.
struct EffectiveMode {
  double gamma_eff = 0.0;      ///< full two-Lorentzian formula [rad/s]
  double omega_eff = 0.0;      ///< full two-Lorentzian formula [rad/s]
  double gamma_eff_rsb = 0.0;  ///< resolved-sideband shortcut, |Delta| = omega_m
  double omega_eff_rsb = 0.0;  ///< resolved-sideband shortcut
  bool high_q = true;          ///< omega_m >= 10 gamma_m; formulas assume a high-Q oscillator
};

/// Full formulas:
///   gamma' = gamma_m + 4 G0^2 a^2 Delta wm g1 / den,
///   omega' = omega_m + G0^2 a^2 Delta (wm^2 - Delta^2 - g1^2) / den,
///   den    = ((wm - Delta)^2 + g1^2) ((wm + Delta)^2 + g1^2).
/// The resolved-sideband shortcuts are the |Delta| = omega_m, g1 << wm
/// limits, carrying sign(delta):
///   gamma'_rsb = gamma_m + sign(D) G0^2 a^2 / g1,
///   omega'_rsb = omega_m - sign(D) G0^2 a^2 / (4 wm).
EffectiveMode effective_mode(const DerivedParams& d, double delta);

/// Quantum back-action limit (gamma_1 / 2 omega_m)^2.
double quantum_limit(double gamma_1, double omega_m);

struct FdtOccupation {
  double value = 0.0;
  bool heating = false;  ///< negative occupation: the Stokes sideband dominates
};

/// Effective occupation from the asymmetry of the TEM01 spectral density
/// S(O) = 2 g1 / ((O - Delta)^2 + g1^2):
///   n_eff(O) = S(-O) / (S(O) - S(-O)).
/// For delta = omega this reduces algebraically to exactly (g1/2 omega)^2
/// (checked on that branch). Throws UndefinedOccupationError when
/// S(O) = S(-O), which for omega > 0 happens only at delta = 0.
FdtOccupation fdt_occupation(double omega, double delta, double gamma_1);

/// Complex coefficient of dq_m in the radiation-pressure force:
///   2 G0^2 a^2 Delta / (((O - D) + i g1) ((O + D) + i g1)).
/// effective_mode relates to it at O = omega_m by
///   omega' = omega_m + Re(K)/2,  gamma' = gamma_m - Im(K).
std::complex<double> rp_response(double omega, const DerivedParams& d, double delta);

/// Analytic cooling summary for the resonant configuration.
struct CoolingReport {
  double gain = 0.0;           ///< parametric gain R (signed)
  double gamma_eff = 0.0;      ///< [rad/s]
  double omega_eff = 0.0;      ///< [rad/s]
  double gamma_eff_rsb = 0.0;  ///< [rad/s]
  double omega_eff_rsb = 0.0;  ///< [rad/s]
  double n_quant = 0.0;        ///< quantum limit (g1/2 wm)^2
  std::optional<double> n_final;      ///< n_th/(1 - R) + n_quant; empty iff R >= 1
  std::optional<double> n_classical;  ///< classical-only n_th/(1 - R), for comparison
};

/// Assembles the full report. Requires the cooling configuration
/// (detuning_00 = 0); throws UnstableSystemError when R >= 1, in which case
/// the effective decay rate is non-positive and no steady occupation exists.
CoolingReport final_occupation(const PhysicalParams& p, const DerivedParams& d);

}  // namespace trio
