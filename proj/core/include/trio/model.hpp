// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace trio {

/// Raw experimental inputs for the three-mode optoacoustic cavity:
/// one acoustic mode coupled to the TEM00 carrier and the TEM01 sideband
/// of a Fabry-Perot cavity. All values SI.
struct PhysicalParams {
  double mass = 0.0;           ///< oscillator effective mass m [kg], > 0
  double cavity_length = 0.0;  ///< cavity length L [m], > 0
  double mech_freq = 0.0;      ///< acoustic eigenfrequency omega_m/2pi [Hz], > 0
  double mech_q = 0.0;         ///< acoustic quality factor Q_m = omega_m/gamma_m, > 0
  double finesse = 0.0;        ///< optical finesse; sets gamma_0 = gamma_1 = pi c/(2 L F)
  double wavelength = 1.064e-6;  ///< TEM00 carrier wavelength [m]; omega_0 = 2 pi c/lambda
  double overlap = 1.0;        ///< geometrical overlap factor Lambda, in (0, 1]
  double power_00 = 0.0;       ///< TEM00 input power I_0 [W], >= 0
  double power_01 = 0.0;       ///< TEM01 input power I_1 [W], >= 0
  double temperature = 0.0;    ///< environment temperature T [K], >= 0
  double mode_gap = 0.0;       ///< Delta = omega_1 - omega_0 [rad/s]; negative = Stokes-resonant
  double detuning_00 = 0.0;    ///< Delta_0 = omega_0 - omega_L [rad/s]; Delta_1 = Delta_0 + Delta

  // Per-mode half-linewidth overrides [rad/s]; when unset both cavity
  // modes take the finesse-derived value.
  std::optional<double> gamma_0;
  std::optional<double> gamma_1;
};

/// One violated parameter bound; `field` names the PhysicalParams member.
struct Violation {
  std::string field;
  std::string message;
};

/// Checks every PhysicalParams invariant. Total: never throws; the empty
/// list means the parameter set is valid. |mode_gap| and |detuning_00| are
/// bounded by the free spectral range pi c/L as a sanity check.
std::vector<Violation> validate(const PhysicalParams& p);

/// Constants derived from PhysicalParams. Frequencies and rates in rad/s,
/// amplitudes dimensionless. Quadratures are normalized so that the vacuum
/// variance is 1/2, i.e. q = (a + a^dag)/sqrt(2); the steady quadrature
/// amplitude of a resonantly driven mode is therefore q_bar = sqrt(2)|a_bar|.
struct DerivedParams {
  double g0 = 0.0;        ///< coupling constant G_0 = sqrt(Lambda hbar w0 w1 / (m wm L^2))
  double gamma_m = 0.0;   ///< acoustic amplitude decay rate omega_m / Q_m
  double gamma_0 = 0.0;   ///< TEM00 half-linewidth
  double gamma_1 = 0.0;   ///< TEM01 half-linewidth
  double omega_m = 0.0;   ///< acoustic angular frequency
  double omega_0 = 0.0;   ///< TEM00 angular frequency
  double omega_1 = 0.0;   ///< TEM01 angular frequency, omega_0 + mode_gap
  double n_th = 0.0;      ///< Bose occupation 1/(exp(hbar wm/kB T) - 1); 0 at T = 0
  double thermal_quanta = 0.0;  ///< kB T/(hbar wm), the classical-equipartition quanta
  double a_bar = 0.0;     ///< steady TEM00 mode amplitude sqrt(2 I0/(gamma_0 hbar w0))
  double q_bar_0 = 0.0;   ///< steady TEM00 quadrature amplitude sqrt(2) a_bar
  double q_bar_1 = 0.0;   ///< steady TEM01 quadrature amplitude sqrt(4 I1/(hbar w1 gamma_1))
};

/// Computes every derived constant. Deterministic; pure. Throws
/// ValidationError naming each offending field if `p` is invalid.
DerivedParams derive_params(const PhysicalParams& p);

/// Parses a plain-text `key = value` parameter file. `#` starts a comment;
/// keys are exactly the PhysicalParams field names (gamma_0/gamma_1 optional);
/// wavelength and overlap carry defaults, everything else is required.
/// Unknown, duplicate, malformed, or missing keys raise ConfigError with the
/// offending line number where one exists.
PhysicalParams load_params(std::istream& in, const std::string& source_name = "<input>");

/// Convenience wrapper reading from a file path.
PhysicalParams load_params_file(const std::string& path);

}  // namespace trio
