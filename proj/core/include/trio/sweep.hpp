// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trio/cooling.hpp"
#include "trio/dynamics.hpp"
#include "trio/entanglement.hpp"
#include "trio/model.hpp"

namespace trio {

/// One sweep axis over a PhysicalParams field.
struct AxisSpec {
  std::string param;
  double start = 0.0;
  double stop = 0.0;
  int count = 0;
  bool log_scale = false;
};

/// 1D or 2D grid specification. Quantities name CoolingReport or
/// EntanglementReport fields (see known_quantities()).
struct SweepSpec {
  std::vector<AxisSpec> axes;
  std::vector<std::string> quantities;
};

/// Composite single-point evaluation. Unstable points carry no covariance
/// or entanglement data; analytic cooling fields are populated whenever the
/// configuration is resonant (detuning_00 = 0), with n_final absent when
/// R >= 1. Entanglement is absent when the stationary covariance fails the
/// physicality test (paper-mode diffusion at low temperature).
struct PointReport {
  PhysicalParams params;
  DerivedParams derived;
  StabilityResult stab;
  std::optional<CovarianceMatrix> covariance;
  std::optional<EntanglementReport> entanglement;
  std::optional<CoolingReport> cooling;
};

PointReport run_point(const PhysicalParams& p, DMode d_mode = DMode::paper);

/// Quantity names addressable in sweeps: the EntanglementReport fields,
/// the CoolingReport fields, and n_acoustic (phonon occupation extracted
/// from the covariance).
const std::vector<std::string>& known_quantities();

/// Value of one named quantity; empty when undefined at this point.
/// Throws ConfigError for an unknown name.
std::optional<double> quantity(const PointReport& r, std::string_view name);

/// Sets one PhysicalParams field by name; throws ConfigError for unknown
/// names (the sweepable fields are the numeric PhysicalParams members plus
/// gamma_0/gamma_1).
void set_param(PhysicalParams& p, std::string_view name, double value);

/// Shortest round-trip decimal representation (std::to_chars), used for
/// all CSV and report output so runs diff byte-for-byte.
std::string format_double(double x);

struct SweepStats {
  long total = 0;
  long unstable = 0;
};

/// Evaluates the grid (row-major, axis1 outer) and writes CSV: optional
/// `# comment` lines, one header row, then one row per grid point with the
/// swept values, the requested quantities (empty cell = undefined), and a
/// true/false stability column. Grid points are independent and evaluated
/// in parallel (`threads` 0 = hardware concurrency); emission is serialized
/// in grid order, so output is byte-identical for any schedule.
SweepStats run_sweep(const SweepSpec& spec, const PhysicalParams& base,
                     DMode d_mode, std::ostream& out, unsigned threads = 0,
                     const std::vector<std::string>& comments = {});

/// Named preset: a full configuration plus what to run.
///  - fig3: 2D power sweep of the entanglement measures
///  - fig4: mode-gap sweep of E_N(TEM01, acoustic)
///  - fig5: temperature sweep, per-curve grid-searched optimal powers
///  - cooling-benchmark: single-point cooling report
struct Recipe {
  std::string name;
  std::string summary;
  PhysicalParams config;
  DMode d_mode = DMode::paper;
  std::optional<SweepSpec> sweep;     // fig3, fig4
  bool per_curve_powers = false;      // fig5
};

/// Exactly four presets: fig3, fig4, fig5, cooling-benchmark.
const std::vector<Recipe>& recipes();

/// Looks a preset up by name; throws ConfigError for unknown names.
const Recipe& find_recipe(std::string_view name);

/// One fig5 curve: quantity maximized over the power grid at t_ref.
struct Fig5Curve {
  std::string quantity;
  double t_ref = 0.0;   ///< optimization temperature [K]
  double i0 = 0.0;      ///< chosen power_00 [W]
  double i1 = 0.0;      ///< chosen power_01 [W]
  double value = 0.0;   ///< quantity at (i0, i1, t_ref)
};

/// Deterministic per-curve power optimization on a fixed grid, restricted
/// to stable configurations (stability does not depend on temperature).
std::array<Fig5Curve, 3> fig5_optimal_powers(const PhysicalParams& base, DMode d_mode);

/// Runs a preset and writes its output (CSV for the sweep-shaped presets,
/// a key = value report for cooling-benchmark).
SweepStats run_recipe(const Recipe& r, std::ostream& out, unsigned threads = 0);

/// Plain-text `key = value` report writers shared by the CLI.
void print_derived(const DerivedParams& d, std::ostream& out);
void print_point_report(const PointReport& r, std::ostream& out);

}  // namespace trio
