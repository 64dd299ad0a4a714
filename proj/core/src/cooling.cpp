// SPDX-License-Identifier: Apache-2.0
#include "trio/cooling.hpp"

#include <cmath>
#include <sstream>

#include "trio/constants.hpp"
#include "trio/errors.hpp"

namespace trio {

namespace {

double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

}  // namespace

double parametric_gain(const PhysicalParams& p, const DerivedParams& d) {
  const double magnitude = d.g0 * d.g0 * d.a_bar * d.a_bar / (d.gamma_1 * d.gamma_m);
  // Independent route from the raw inputs.
  const double alt = 2.0 * p.overlap * p.power_00 * d.omega_1 /
                     (p.mass * d.omega_m * p.cavity_length * p.cavity_length * d.gamma_0 *
                      d.gamma_1 * d.gamma_m);
  if (magnitude > 0.0 && std::abs(magnitude - alt) > 1e-9 * magnitude) {
    std::ostringstream msg;
    msg << "parametric gain routes disagree: " << magnitude << " vs " << alt;
    throw Error(msg.str());
  }
  return -sign_of(p.mode_gap) * magnitude;
}

EffectiveMode effective_mode(const DerivedParams& d, double delta) {
  EffectiveMode em;
  em.high_q = d.omega_m >= 10.0 * d.gamma_m;

  const double coupling = d.g0 * d.g0 * d.a_bar * d.a_bar;  // G0^2 a_bar^2
  const double wm = d.omega_m;
  const double g1 = d.gamma_1;
  const double den = ((wm - delta) * (wm - delta) + g1 * g1) *
                     ((wm + delta) * (wm + delta) + g1 * g1);
  em.gamma_eff = d.gamma_m + 4.0 * coupling * delta * wm * g1 / den;
  em.omega_eff = wm + coupling * delta * (wm * wm - delta * delta - g1 * g1) / den;

  const double s = sign_of(delta);
  em.gamma_eff_rsb = d.gamma_m + s * coupling / g1;
  em.omega_eff_rsb = wm - s * coupling / (4.0 * wm);
  return em;
}

double quantum_limit(double gamma_1, double omega_m) {
  const double x = gamma_1 / (2.0 * omega_m);
  return x * x;
}

FdtOccupation fdt_occupation(double omega, double delta, double gamma_1) {
  const auto spectrum = [delta, gamma_1](double w) {
    return 2.0 * gamma_1 / ((w - delta) * (w - delta) + gamma_1 * gamma_1);
  };
  const double s_pos = spectrum(omega);
  const double s_neg = spectrum(-omega);
  if (s_pos == s_neg)
    throw UndefinedOccupationError(
        "spectral density is symmetric (delta = 0): effective occupation undefined");

  FdtOccupation r;
  r.value = s_neg / (s_pos - s_neg);
  r.heating = r.value < 0.0;
  if (delta == omega) {
    // On this branch the expression reduces algebraically to (g1/2 omega)^2.
    const double exact = quantum_limit(gamma_1, omega);
    if (std::abs(r.value - exact) > 1e-12 * exact)
      throw Error("FDT occupation failed its algebraic identity at delta = omega");
  }
  return r;
}

std::complex<double> rp_response(double omega, const DerivedParams& d, double delta) {
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> den =
      ((omega - delta) + i * d.gamma_1) * ((omega + delta) + i * d.gamma_1);
  return 2.0 * d.g0 * d.g0 * d.a_bar * d.a_bar * delta / den;
}

CoolingReport final_occupation(const PhysicalParams& p, const DerivedParams& d) {
  if (p.detuning_00 != 0.0)
    throw ValidationError("final_occupation requires the cooling configuration (detuning_00 = 0)");

  CoolingReport r;
  r.gain = parametric_gain(p, d);
  const EffectiveMode em = effective_mode(d, p.mode_gap);
  r.gamma_eff = em.gamma_eff;
  r.omega_eff = em.omega_eff;
  r.gamma_eff_rsb = em.gamma_eff_rsb;
  r.omega_eff_rsb = em.omega_eff_rsb;
  r.n_quant = quantum_limit(d.gamma_1, d.omega_m);
  if (r.gain >= 1.0) {
    std::ostringstream msg;
    msg << "parametric gain " << r.gain << " >= 1: effective decay rate is non-positive";
    throw UnstableSystemError(msg.str());
  }
  r.n_classical = d.n_th / (1.0 - r.gain);
  r.n_final = *r.n_classical + r.n_quant;
  return r;
}

}  // namespace trio
