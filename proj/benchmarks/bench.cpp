// SPDX-License-Identifier: Apache-2.0
//
// Micro-benchmarks for the hot paths: derived constants, stability
// eigenvalues, the Lyapunov solve, the entanglement measures, and a full
// sweep row. Prints one line per benchmark with the median time per call.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <vector>

#include "trio/constants.hpp"
#include "trio/cooling.hpp"
#include "trio/dynamics.hpp"
#include "trio/entanglement.hpp"
#include "trio/sweep.hpp"

namespace {

trio::PhysicalParams benchmark_params() {
  trio::PhysicalParams p;
  p.mass = 1e-7;
  p.cavity_length = 0.02;
  p.mech_freq = 1e6;
  p.mech_q = 1e7;
  p.finesse = 1e4;
  p.power_00 = 1.5;
  p.power_01 = 0.5;
  p.temperature = 4.0;
  p.mode_gap = 2.0 * trio::constants::kPi * 1e6;
  p.detuning_00 = 0.0;
  return p;
}

volatile double sink = 0.0;

void report(const char* name, const std::function<double()>& fn, int iters) {
  // warm-up, then median of 5 repetitions
  fn();
  std::vector<double> times;
  for (int rep = 0; rep < 5; ++rep) {
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < iters; ++i) sink = fn();
    const auto stop = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double>(stop - start).count() / iters);
  }
  std::sort(times.begin(), times.end());
  std::printf("%-28s %10.2f us/call  (%d iters)\n", name, times[2] * 1e6, iters);
}

}  // namespace

int main() {
  const auto p = benchmark_params();
  const auto d = trio::derive_params(p);
  const auto model = trio::build_model(d, p);
  const auto v = trio::steady_covariance(model);

  report("derive_params", [&] { return trio::derive_params(p).g0; }, 20000);
  report("build_model", [&] { return trio::build_model(d, p).drift(1, 4); }, 20000);
  report("stability", [&] { return trio::stability(model).max_real_part; }, 5000);
  report("steady_covariance", [&] { return trio::steady_covariance(model)(0, 0); }, 2000);
  report("log_negativity", [&] {
    return trio::log_negativity(trio::submatrix(v, trio::ModePair::tem01_acoustic));
  }, 20000);
  report("tripartite_ppt", [&] { return trio::tripartite_ppt(v).min_symplectic; }, 5000);
  report("entanglement_report", [&] { return trio::entanglement_report(v).en_1m; }, 2000);
  report("run_point", [&] {
    return trio::run_point(p).entanglement->en_1m;
  }, 1000);
  report("sweep 16x16 (2 threads)", [&] {
    trio::SweepSpec spec;
    spec.axes = {{"power_00", 0.1, 2.5, 16, false}, {"power_01", 0.0, 1.5, 16, false}};
    spec.quantities = {"en_0m", "en_1m", "en_01"};
    std::ostringstream out;
    trio::run_sweep(spec, p, trio::DMode::paper, out, 2);
    return static_cast<double>(out.str().size());
  }, 3);
  return 0;
}
