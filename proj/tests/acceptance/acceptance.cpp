// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one numbered end-to-end criterion per run argument
// (default: all), one [PASS]/[FAIL] line each, nonzero exit when any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lyapunov_oracle.hpp"
#include "test_config.hpp"
#include "trio/constants.hpp"
#include "trio/cooling.hpp"
#include "trio/dynamics.hpp"
#include "trio/entanglement.hpp"
#include "trio/errors.hpp"
#include "trio/sweep.hpp"

using trio::testing::benchmark_params;
using trio::testing::power_for_gain;
using trio::testing::random_stable_params;
using trio::testing::rel_err;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Check {
  Outcome& outcome;
  void require(bool ok, const std::string& why) {
    if (!ok && outcome.pass) {
      outcome.pass = false;
      outcome.detail = why;
    }
  }
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// 1. Cooling benchmark: 0.1 mg / 2 cm / 1 MHz / Q 1e7 / finesse 1e4 cavity
//    with 50 mW at 4 K reaches n_final in [0.35, 0.65].
Outcome criterion_1() {
  Outcome o;
  Check c{o};
  const auto r = trio::run_point(benchmark_params());
  c.require(r.stab.stable, "benchmark configuration must be stable");
  c.require(r.cooling && r.cooling->n_final, "final occupation must be defined");
  if (o.pass) {
    const double n = *r.cooling->n_final;
    c.require(n >= 0.35 && n <= 0.65, "n_final = " + fmt(n) + " outside [0.35, 0.65]");
    if (o.pass) o.detail = "n_final = " + fmt(n);
  }
  return o;
}

// 2. FDT occupation at delta = omega_m equals (gamma_1/2 omega_m)^2 to 1e-12.
Outcome criterion_2() {
  Outcome o;
  Check c{o};
  const double wm = 2.0 * trio::constants::kPi * 1e6;
  for (const double ratio : {0.01, 0.1, 0.375}) {
    const double g1 = ratio * wm;
    const double got = trio::fdt_occupation(wm, wm, g1).value;
    const double want = trio::quantum_limit(g1, wm);
    c.require(rel_err(got, want) <= 1e-12,
              "gamma_1/omega_m = " + fmt(ratio) + ": relative error " +
                  fmt(rel_err(got, want)));
  }
  if (o.pass) o.detail = "identity holds at 1e-12 for all three linewidths";
  return o;
}

// 3. Lyapunov solver vs time-integration oracle on 20 random stable
//    configurations, 1e-6 relative Frobenius.
Outcome criterion_3() {
  Outcome o;
  Check c{o};
  std::mt19937 rng(424242);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const auto p = random_stable_params(rng);
    const auto m = trio::build_model(trio::derive_params(p), p);
    const auto v = trio::steady_covariance(m);
    const auto v_oracle = trio::testing::integrate_covariance(m.drift, m.diffusion);
    const double rel = (v.matrix() - v_oracle).norm() / v_oracle.norm();
    worst = std::max(worst, rel);
    c.require(rel <= 1e-6, "configuration " + std::to_string(k) +
                               ": relative Frobenius error " + fmt(rel));
  }
  if (o.pass) o.detail = "20 configurations, worst relative error " + fmt(worst);
  return o;
}

// 4. Decoupled analytic solution: zero coupling, zero detunings.
Outcome criterion_4() {
  Outcome o;
  Check c{o};
  auto p = benchmark_params();
  p.power_00 = 0.0;
  p.power_01 = 0.0;
  p.mode_gap = 0.0;
  const auto d = trio::derive_params(p);
  const auto v = trio::steady_covariance(trio::build_model(d, p));
  const double n = d.thermal_quanta;
  const double expected[6] = {n, n, 0.5, 0.5, 0.5, 0.5};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      const double want = i == j ? expected[i] : 0.0;
      c.require(std::abs(v(i, j) - want) <= 1e-10 * std::max(1.0, n),
                "V(" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                    fmt(v(i, j)) + ", expected " + fmt(want));
    }
  const auto rep = trio::entanglement_report(v);
  c.require(rep.en_0m == 0.0 && rep.en_1m == 0.0 && rep.en_01 == 0.0,
            "all three E_N must be exactly zero");
  if (o.pass) o.detail = "V = diag(n, n, 1/2, ...) with n = " + fmt(n) + "; E_N all zero";
  return o;
}

// 5. Two-mode squeezed closed form: E_N = 2r.
Outcome criterion_5() {
  Outcome o;
  Check c{o};
  for (const double r : {0.1, 1.0, 3.0}) {
    trio::Matrix4 v = trio::Matrix4::Zero();
    const double ch = 0.5 * std::cosh(2.0 * r);
    const double sh = 0.5 * std::sinh(2.0 * r);
    v.diagonal().setConstant(ch);
    v(0, 2) = v(2, 0) = sh;
    v(1, 3) = v(3, 1) = -sh;
    const double en = trio::log_negativity(v);
    c.require(std::abs(en - 2.0 * r) <= 1e-9,
              "r = " + fmt(r) + ": |E_N - 2r| = " + fmt(std::abs(en - 2.0 * r)));
  }
  if (o.pass) o.detail = "E_N = 2r to 1e-9 for r in {0.1, 1, 3}";
  return o;
}

// 6. FDT-vs-Lyapunov cross-validation at gamma_1 = 0.05 omega_m across
//    |R| in [10, 1e4], zero-point diffusion, 10% relative.
Outcome criterion_6() {
  Outcome o;
  Check c{o};
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    const double target = std::pow(10.0, 1.0 + 3.0 * k / 9.0);
    auto p = benchmark_params();
    const double wm = 2.0 * trio::constants::kPi * p.mech_freq;
    p.gamma_0 = 0.05 * wm;
    p.gamma_1 = 0.05 * wm;
    p.power_00 = power_for_gain(p, target, *p.gamma_0, *p.gamma_1);
    const auto d = trio::derive_params(p);
    const auto v =
        trio::steady_covariance(trio::build_model(d, p, trio::DMode::zero_point));
    const auto rep = trio::final_occupation(p, d);
    const double rel = rel_err(trio::acoustic_occupation(v), *rep.n_final);
    worst = std::max(worst, rel);
    c.require(rel <= 0.10, "|R| = " + fmt(target) + ": relative deviation " + fmt(rel));
  }
  if (o.pass) o.detail = "10 gains, worst relative deviation " + fmt(worst);
  return o;
}

// 7. Mode-gap sweep at power_00 = 4.5 W: E_N(TEM01, acoustic) should peak
//    within 10% of omega_m and be strictly positive there.
Outcome criterion_7() {
  Outcome o;
  Check c{o};
  auto p = benchmark_params();
  p.power_00 = 4.5;
  p.power_01 = 0.0;
  const double wm = 2.0 * trio::constants::kPi * p.mech_freq;
  double best_gap = 0.0, best_en = -1.0;
  for (int k = 0; k < 100; ++k) {
    p.mode_gap = (0.2 + 1.8 * k / 99.0) * wm;
    const auto r = trio::run_point(p);
    if (!r.stab.stable || !r.entanglement) continue;
    if (r.entanglement->en_1m > best_en) {
      best_en = r.entanglement->en_1m;
      best_gap = p.mode_gap;
    }
  }
  c.require(best_en > 0.0, "no stable point with defined E_N found");
  if (o.pass) {
    c.require(best_en > 0.0 && std::abs(best_gap - wm) <= 0.1 * wm,
              "peak at mode_gap = " + fmt(best_gap / wm) +
                  " omega_m (E_N = " + fmt(best_en) + "), outside [0.9, 1.1] omega_m");
    if (o.pass)
      o.detail = "peak at " + fmt(best_gap / wm) + " omega_m, E_N = " + fmt(best_en);
  }
  return o;
}

// 8. Temperature sweep at per-curve optimal powers: monotone non-increasing
//    curves, optoacoustic pairs alive at 50 K, optical pair dying in [5, 30] K.
Outcome criterion_8() {
  Outcome o;
  Check c{o};
  const auto base = benchmark_params();
  const auto curves = trio::fig5_optimal_powers(base, trio::DMode::paper);

  const int n_temps = 40;
  std::vector<double> temps(n_temps);
  const double lo = std::log(0.1), hi = std::log(100.0);
  for (int i = 0; i < n_temps; ++i) temps[i] = std::exp(lo + (hi - lo) * i / (n_temps - 1));

  const auto value_at = [&](const trio::Fig5Curve& curve, double t) {
    auto p = base;
    p.power_00 = curve.i0;
    p.power_01 = curve.i1;
    p.temperature = t;
    const auto r = trio::run_point(p);
    if (!r.stab.stable || !r.entanglement)
      throw trio::Error("fig5 curve configuration must stay stable across temperatures");
    return *trio::quantity(r, curve.quantity);
  };

  for (const auto& curve : curves) {
    double prev = std::numeric_limits<double>::infinity();
    for (const double t : temps) {
      const double en = value_at(curve, t);
      c.require(en <= prev + 1e-9,
                curve.quantity + " increased between consecutive temperatures near " +
                    fmt(t) + " K");
      prev = en;
    }
  }

  c.require(value_at(curves[0], 50.0) > 0.0, "en_0m must stay positive at 50 K");
  c.require(value_at(curves[1], 50.0) > 0.0, "en_1m must stay positive at 50 K");

  double last_positive = 0.0, first_zero = 0.0;
  for (const double t : temps) {
    if (value_at(curves[2], t) > 0.0) {
      last_positive = t;
    } else {
      first_zero = t;
      break;
    }
  }
  c.require(last_positive > 0.0, "en_01 must be positive at low temperature");
  c.require(first_zero > 0.0, "en_01 must vanish below 100 K");
  c.require(last_positive >= 5.0 && first_zero <= 30.0,
            "en_01 crossing bracket [" + fmt(last_positive) + ", " + fmt(first_zero) +
                "] K not inside [5, 30] K");
  if (o.pass)
    o.detail = "en_0m(50 K) = " + fmt(value_at(curves[0], 50.0)) + ", en_1m(50 K) = " +
               fmt(value_at(curves[1], 50.0)) + ", en_01 crossing in [" +
               fmt(last_positive) + ", " + fmt(first_zero) + "] K";
  return o;
}

// 9. Gain/stability consistency across 50 random configurations on both
//    sidebands: sign(gamma_eff - gamma_m) tracks the sideband, R > 1 is
//    always eigenvalue-unstable, cooling configurations are always stable.
Outcome criterion_9() {
  Outcome o;
  Check c{o};
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int k = 0; k < 50; ++k) {
    auto p = benchmark_params();
    const double wm = 2.0 * trio::constants::kPi * p.mech_freq;
    p.mech_q = std::pow(10.0, 5.0 + 2.0 * uni(rng));
    const double g = wm * (0.01 + 0.04 * uni(rng));
    p.gamma_0 = g;
    p.gamma_1 = g;

    const bool cooling_side = k < 25;
    double target;
    if (cooling_side) {
      p.mode_gap = wm;
      target = std::pow(10.0, -1.3 + 5.0 * uni(rng));  // |R| in [0.05, 5e3]
    } else {
      p.mode_gap = -wm;
      // keep clear of the marginal sliver around R = 1
      target = uni(rng) < 0.5 ? 0.05 + 0.85 * uni(rng) : 1.1 * std::pow(10.0, 1.66 * uni(rng));
    }
    p.power_00 = power_for_gain(p, target, g, g);

    const auto d = trio::derive_params(p);
    const double gain = trio::parametric_gain(p, d);
    const auto em = trio::effective_mode(d, p.mode_gap);
    const bool stable = trio::stability(trio::build_model(d, p)).stable;

    if (cooling_side) {
      c.require(gain < 0.0, "cooling configuration must have negative gain");
      c.require(em.gamma_eff > d.gamma_m, "cooling must increase the damping");
      c.require(stable, "cooling configuration with R = " + fmt(gain) + " must be stable");
    } else {
      c.require(gain > 0.0, "Stokes configuration must have positive gain");
      c.require(em.gamma_eff < d.gamma_m, "gain must decrease the damping");
      if (gain > 1.0)
        c.require(!stable, "R = " + fmt(gain) + " > 1 must be eigenvalue-unstable");
      else
        c.require(stable, "R = " + fmt(gain) + " < 1 must remain stable");
    }
  }
  if (o.pass) o.detail = "50 configurations consistent across both sidebands";
  return o;
}

// 10. Determinism: repeated and parallel runs of the fig3 preset produce
//     byte-identical CSV.
Outcome criterion_10() {
  Outcome o;
  Check c{o};
  const auto& fig3 = trio::find_recipe("fig3");
  const auto render = [&](unsigned threads) {
    std::ostringstream out;
    trio::run_recipe(fig3, out, threads);
    return out.str();
  };
  const std::string serial = render(1);
  c.require(render(2) == serial, "2-thread run differs from serial");
  c.require(render(0) == serial, "hardware-concurrency run differs from serial");
  c.require(render(1) == serial, "repeated serial run differs");
  if (o.pass)
    o.detail = "fig3 preset (" + std::to_string(serial.size()) + " bytes) byte-identical";
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "cooling benchmark", 1.0, criterion_1},
      {2, "quantum limit identity", 10.0, criterion_2},
      {3, "Lyapunov oracle equivalence", 10.0, criterion_3},
      {4, "decoupled analytic solution", 10.0, criterion_4},
      {5, "two-mode squeezed closed form", 10.0, criterion_5},
      {6, "FDT-vs-Lyapunov cross-validation", 5.0, criterion_6},
      {7, "mode-gap sweep peak location", 5.0, criterion_7},
      {8, "temperature sweep structure", 30.0, criterion_8},
      {9, "stability/gain consistency", 30.0, criterion_9},
      {10, "sweep determinism", 30.0, criterion_10},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& criterion : criteria()) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), criterion.id) == selected.end())
      continue;

    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.pass && seconds > criterion.budget_seconds) {
      outcome.pass = false;
      outcome.detail = "runtime " + fmt(seconds) + " s exceeds budget " +
                       fmt(criterion.budget_seconds) + " s";
    }

    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << "C" << criterion.id << " "
              << criterion.title << ": " << outcome.detail << " (" << fmt(seconds)
              << " s)\n";
    if (!outcome.pass) ++failures;
  }
  return failures;
}
