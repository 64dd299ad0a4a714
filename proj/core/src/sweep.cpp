// SPDX-License-Identifier: Apache-2.0
#include "trio/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <thread>

#include "trio/errors.hpp"

namespace trio {

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

PointReport run_point(const PhysicalParams& p, DMode d_mode) {
  PointReport r;
  r.params = p;
  r.derived = derive_params(p);
  const LinearModel model = build_model(r.derived, p, d_mode);
  r.stab = stability(model);
  if (r.stab.stable) {
    r.covariance = steady_covariance(model);
    if (r.covariance->physical()) r.entanglement = entanglement_report(*r.covariance);
  }
  if (p.detuning_00 == 0.0) {
    CoolingReport c;
    c.gain = parametric_gain(p, r.derived);
    const EffectiveMode em = effective_mode(r.derived, p.mode_gap);
    c.gamma_eff = em.gamma_eff;
    c.omega_eff = em.omega_eff;
    c.gamma_eff_rsb = em.gamma_eff_rsb;
    c.omega_eff_rsb = em.omega_eff_rsb;
    c.n_quant = quantum_limit(r.derived.gamma_1, r.derived.omega_m);
    if (c.gain < 1.0) {
      c.n_classical = r.derived.n_th / (1.0 - c.gain);
      c.n_final = *c.n_classical + c.n_quant;
    }
    r.cooling = c;
  }
  return r;
}

const std::vector<std::string>& known_quantities() {
  static const std::vector<std::string> names = {
      "en_0m", "en_1m", "en_01", "tripartite_min_symplectic",
      "gain", "gamma_eff", "omega_eff", "gamma_eff_rsb", "omega_eff_rsb",
      "n_quant", "n_final", "n_classical", "n_acoustic",
  };
  return names;
}

std::optional<double> quantity(const PointReport& r, std::string_view name) {
  const auto ent = [&](double EntanglementReport::*field) -> std::optional<double> {
    if (!r.entanglement) return std::nullopt;
    return (*r.entanglement).*field;
  };
  if (name == "en_0m") return ent(&EntanglementReport::en_0m);
  if (name == "en_1m") return ent(&EntanglementReport::en_1m);
  if (name == "en_01") return ent(&EntanglementReport::en_01);
  if (name == "tripartite_min_symplectic")
    return ent(&EntanglementReport::tripartite_min_symplectic);

  const auto cool = [&](double CoolingReport::*field) -> std::optional<double> {
    if (!r.cooling) return std::nullopt;
    return (*r.cooling).*field;
  };
  if (name == "gain") return cool(&CoolingReport::gain);
  if (name == "gamma_eff") return cool(&CoolingReport::gamma_eff);
  if (name == "omega_eff") return cool(&CoolingReport::omega_eff);
  if (name == "gamma_eff_rsb") return cool(&CoolingReport::gamma_eff_rsb);
  if (name == "omega_eff_rsb") return cool(&CoolingReport::omega_eff_rsb);
  if (name == "n_quant") return cool(&CoolingReport::n_quant);
  if (name == "n_final") return r.cooling ? r.cooling->n_final : std::nullopt;
  if (name == "n_classical") return r.cooling ? r.cooling->n_classical : std::nullopt;
  if (name == "n_acoustic") {
    if (!r.covariance) return std::nullopt;
    return acoustic_occupation(*r.covariance);
  }
  throw ConfigError("unknown quantity '" + std::string(name) + "'");
}

void set_param(PhysicalParams& p, std::string_view name, double value) {
  if (name == "mass") p.mass = value;
  else if (name == "cavity_length") p.cavity_length = value;
  else if (name == "mech_freq") p.mech_freq = value;
  else if (name == "mech_q") p.mech_q = value;
  else if (name == "finesse") p.finesse = value;
  else if (name == "wavelength") p.wavelength = value;
  else if (name == "overlap") p.overlap = value;
  else if (name == "power_00") p.power_00 = value;
  else if (name == "power_01") p.power_01 = value;
  else if (name == "temperature") p.temperature = value;
  else if (name == "mode_gap") p.mode_gap = value;
  else if (name == "detuning_00") p.detuning_00 = value;
  else if (name == "gamma_0") p.gamma_0 = value;
  else if (name == "gamma_1") p.gamma_1 = value;
  else throw ConfigError("unknown parameter '" + std::string(name) + "'");
}

namespace {

std::vector<double> axis_values(const AxisSpec& a) {
  std::vector<double> values(a.count);
  if (a.log_scale) {
    const double lo = std::log(a.start), hi = std::log(a.stop);
    for (int i = 0; i < a.count; ++i)
      values[i] = std::exp(lo + (hi - lo) * i / (a.count - 1));
  } else {
    for (int i = 0; i < a.count; ++i)
      values[i] = a.start + (a.stop - a.start) * i / (a.count - 1);
  }
  return values;
}

void check_spec(const SweepSpec& spec) {
  if (spec.axes.empty() || spec.axes.size() > 2)
    throw ConfigError("sweep needs 1 or 2 axes");
  for (const auto& a : spec.axes) {
    if (a.count < 2) throw ConfigError("axis '" + a.param + "': count must be >= 2");
    if (!(a.start < a.stop)) throw ConfigError("axis '" + a.param + "': start must be < stop");
    if (a.log_scale && a.start <= 0.0)
      throw ConfigError("axis '" + a.param + "': log scale requires start > 0");
  }
  if (spec.quantities.empty()) throw ConfigError("no quantities requested");
  for (const auto& q : spec.quantities) {
    const auto& known = known_quantities();
    if (std::find(known.begin(), known.end(), q) == known.end())
      throw ConfigError("unknown quantity '" + q + "'");
  }
}

struct RowResult {
  bool stable = false;
  std::vector<std::optional<double>> values;
};

}  // namespace

SweepStats run_sweep(const SweepSpec& spec, const PhysicalParams& base, DMode d_mode,
                     std::ostream& out, unsigned threads,
                     const std::vector<std::string>& comments) {
  check_spec(spec);
  // Axis names must be settable before any work happens.
  for (const auto& a : spec.axes) {
    PhysicalParams probe = base;
    set_param(probe, a.param, a.start);
  }

  const std::vector<double> ax1 = axis_values(spec.axes[0]);
  const std::vector<double> ax2 =
      spec.axes.size() == 2 ? axis_values(spec.axes[1]) : std::vector<double>{0.0};
  const std::size_t n_points = ax1.size() * ax2.size();

  std::vector<RowResult> rows(n_points);
  const auto eval_point = [&](std::size_t idx) {
    PhysicalParams p = base;
    set_param(p, spec.axes[0].param, ax1[idx / ax2.size()]);
    if (spec.axes.size() == 2) set_param(p, spec.axes[1].param, ax2[idx % ax2.size()]);
    const PointReport r = run_point(p, d_mode);
    RowResult row;
    row.stable = r.stab.stable;
    row.values.reserve(spec.quantities.size());
    for (const auto& q : spec.quantities) row.values.push_back(quantity(r, q));
    rows[idx] = std::move(row);
  };

  unsigned n_threads = threads == 0 ? std::thread::hardware_concurrency() : threads;
  n_threads = std::max(1u, std::min<unsigned>(n_threads, n_points));
  if (n_threads == 1) {
    for (std::size_t i = 0; i < n_points; ++i) eval_point(i);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(n_threads);
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t)
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < n_points; i += n_threads) eval_point(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  // Emission is serialized in grid order regardless of execution schedule.
  for (const auto& c : comments) out << "# " << c << "\n";
  out << spec.axes[0].param;
  if (spec.axes.size() == 2) out << "," << spec.axes[1].param;
  for (const auto& q : spec.quantities) out << "," << q;
  out << ",stability\n";

  SweepStats stats;
  for (std::size_t idx = 0; idx < n_points; ++idx) {
    out << format_double(ax1[idx / ax2.size()]);
    if (spec.axes.size() == 2) out << "," << format_double(ax2[idx % ax2.size()]);
    for (const auto& v : rows[idx].values) {
      out << ",";
      if (v) out << format_double(*v);
    }
    out << "," << (rows[idx].stable ? "true" : "false") << "\n";
    ++stats.total;
    if (!rows[idx].stable) ++stats.unstable;
  }
  return stats;
}

void print_derived(const DerivedParams& d, std::ostream& out) {
  out << "g0 = " << format_double(d.g0) << "\n"
      << "gamma_m = " << format_double(d.gamma_m) << "\n"
      << "gamma_0 = " << format_double(d.gamma_0) << "\n"
      << "gamma_1 = " << format_double(d.gamma_1) << "\n"
      << "omega_m = " << format_double(d.omega_m) << "\n"
      << "omega_0 = " << format_double(d.omega_0) << "\n"
      << "omega_1 = " << format_double(d.omega_1) << "\n"
      << "n_th = " << format_double(d.n_th) << "\n"
      << "thermal_quanta = " << format_double(d.thermal_quanta) << "\n"
      << "a_bar = " << format_double(d.a_bar) << "\n"
      << "q_bar_0 = " << format_double(d.q_bar_0) << "\n"
      << "q_bar_1 = " << format_double(d.q_bar_1) << "\n";
}

void print_point_report(const PointReport& r, std::ostream& out) {
  print_derived(r.derived, out);
  out << "stable = " << (r.stab.stable ? "true" : "false") << "\n"
      << "max_real_part = " << format_double(r.stab.max_real_part) << "\n";
  for (int i = 0; i < 6; ++i)
    out << "eigenvalue_" << i << " = " << format_double(r.stab.eigenvalues[i].real()) << " + "
        << format_double(r.stab.eigenvalues[i].imag()) << "i\n";
  if (r.covariance) {
    out << "covariance_physical = " << (r.covariance->physical() ? "true" : "false") << "\n"
        << "min_uncertainty_eig = " << format_double(r.covariance->min_uncertainty_eig()) << "\n"
        << "n_acoustic = " << format_double(acoustic_occupation(*r.covariance)) << "\n";
  }
  if (r.entanglement) {
    out << "en_0m = " << format_double(r.entanglement->en_0m) << "\n"
        << "en_1m = " << format_double(r.entanglement->en_1m) << "\n"
        << "en_01 = " << format_double(r.entanglement->en_01) << "\n"
        << "tripartite_min_symplectic = "
        << format_double(r.entanglement->tripartite_min_symplectic) << "\n";
  }
  if (r.cooling) {
    out << "gain = " << format_double(r.cooling->gain) << "\n"
        << "gamma_eff = " << format_double(r.cooling->gamma_eff) << "\n"
        << "omega_eff = " << format_double(r.cooling->omega_eff) << "\n"
        << "gamma_eff_rsb = " << format_double(r.cooling->gamma_eff_rsb) << "\n"
        << "omega_eff_rsb = " << format_double(r.cooling->omega_eff_rsb) << "\n"
        << "n_quant = " << format_double(r.cooling->n_quant) << "\n";
    if (r.cooling->n_classical)
      out << "n_classical = " << format_double(*r.cooling->n_classical) << "\n";
    if (r.cooling->n_final)
      out << "n_final = " << format_double(*r.cooling->n_final) << "\n";
  }
}

}  // namespace trio
