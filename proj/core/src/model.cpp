// SPDX-License-Identifier: Apache-2.0
#include "trio/model.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include "trio/constants.hpp"
#include "trio/errors.hpp"

namespace trio {

namespace {

bool finite_positive(double x) { return std::isfinite(x) && x > 0.0; }
bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

void require_positive(std::vector<Violation>& out, const char* field, double x) {
  if (!finite_positive(x)) out.push_back({field, "must be finite and > 0"});
}

}  // namespace

std::vector<Violation> validate(const PhysicalParams& p) {
  std::vector<Violation> out;
  require_positive(out, "mass", p.mass);
  require_positive(out, "cavity_length", p.cavity_length);
  require_positive(out, "mech_freq", p.mech_freq);
  require_positive(out, "mech_q", p.mech_q);
  require_positive(out, "finesse", p.finesse);
  require_positive(out, "wavelength", p.wavelength);
  if (!std::isfinite(p.overlap) || p.overlap <= 0.0 || p.overlap > 1.0)
    out.push_back({"overlap", "must be in (0, 1]"});
  if (!finite_nonneg(p.power_00)) out.push_back({"power_00", "must be finite and >= 0"});
  if (!finite_nonneg(p.power_01)) out.push_back({"power_01", "must be finite and >= 0"});
  if (!finite_nonneg(p.temperature)) out.push_back({"temperature", "must be finite and >= 0"});

  if (!std::isfinite(p.mode_gap)) out.push_back({"mode_gap", "must be finite"});
  if (!std::isfinite(p.detuning_00)) out.push_back({"detuning_00", "must be finite"});
  if (finite_positive(p.cavity_length)) {
    const double fsr = constants::kPi * constants::kSpeedOfLight / p.cavity_length;
    if (std::isfinite(p.mode_gap) && std::abs(p.mode_gap) >= fsr)
      out.push_back({"mode_gap", "|mode_gap| must be below the free spectral range pi c/L"});
    if (std::isfinite(p.detuning_00) && std::abs(p.detuning_00) >= fsr)
      out.push_back({"detuning_00", "|detuning_00| must be below the free spectral range pi c/L"});
  }
  if (p.gamma_0 && !finite_positive(*p.gamma_0))
    out.push_back({"gamma_0", "override must be finite and > 0"});
  if (p.gamma_1 && !finite_positive(*p.gamma_1))
    out.push_back({"gamma_1", "override must be finite and > 0"});
  return out;
}

DerivedParams derive_params(const PhysicalParams& p) {
  const auto violations = validate(p);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "invalid parameters:";
    for (const auto& v : violations) msg << " [" << v.field << ": " << v.message << "]";
    throw ValidationError(msg.str());
  }

  using namespace constants;
  DerivedParams d;
  d.omega_m = 2.0 * kPi * p.mech_freq;
  d.gamma_m = d.omega_m / p.mech_q;
  const double gamma_cavity = kPi * kSpeedOfLight / (2.0 * p.cavity_length * p.finesse);
  d.gamma_0 = p.gamma_0.value_or(gamma_cavity);
  d.gamma_1 = p.gamma_1.value_or(gamma_cavity);
  d.omega_0 = 2.0 * kPi * kSpeedOfLight / p.wavelength;
  d.omega_1 = d.omega_0 + p.mode_gap;
  d.g0 = std::sqrt(p.overlap * kHbar * d.omega_0 * d.omega_1 /
                   (p.mass * d.omega_m * p.cavity_length * p.cavity_length));
  if (p.temperature > 0.0) {
    d.n_th = 1.0 / std::expm1(kHbar * d.omega_m / (kBoltzmann * p.temperature));
    d.thermal_quanta = kBoltzmann * p.temperature / (kHbar * d.omega_m);
  } else {
    d.n_th = 0.0;
    d.thermal_quanta = 0.0;
  }
  d.a_bar = std::sqrt(2.0 * p.power_00 / (d.gamma_0 * kHbar * d.omega_0));
  // Quadrature amplitudes in the vacuum-variance-1/2 normalization:
  // q_bar = sqrt(2) |a_bar|, i.e. sqrt(4 I / (hbar w gamma)).
  d.q_bar_0 = std::sqrt(4.0 * p.power_00 / (kHbar * d.omega_0 * d.gamma_0));
  d.q_bar_1 = std::sqrt(4.0 * p.power_01 / (kHbar * d.omega_1 * d.gamma_1));
  return d;
}

namespace {

struct Key {
  double PhysicalParams::*field;
  bool required;
};

const std::map<std::string, Key>& key_table() {
  static const std::map<std::string, Key> table = {
      {"mass", {&PhysicalParams::mass, true}},
      {"cavity_length", {&PhysicalParams::cavity_length, true}},
      {"mech_freq", {&PhysicalParams::mech_freq, true}},
      {"mech_q", {&PhysicalParams::mech_q, true}},
      {"finesse", {&PhysicalParams::finesse, true}},
      {"wavelength", {&PhysicalParams::wavelength, false}},
      {"overlap", {&PhysicalParams::overlap, false}},
      {"power_00", {&PhysicalParams::power_00, true}},
      {"power_01", {&PhysicalParams::power_01, true}},
      {"temperature", {&PhysicalParams::temperature, true}},
      {"mode_gap", {&PhysicalParams::mode_gap, true}},
      {"detuning_00", {&PhysicalParams::detuning_00, true}},
  };
  return table;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text, const std::string& source, int line) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(source + ":" + std::to_string(line) + ": not a number: '" + text + "'", line);
  }
}

}  // namespace

PhysicalParams load_params(std::istream& in, const std::string& source_name) {
  PhysicalParams p;
  std::set<std::string> seen;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw ConfigError(source_name + ":" + std::to_string(line) + ": expected 'key = value'", line);
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError(source_name + ":" + std::to_string(line) + ": expected 'key = value'", line);
    if (!seen.insert(key).second)
      throw ConfigError(source_name + ":" + std::to_string(line) + ": duplicate key '" + key + "'", line);

    const double v = parse_number(value, source_name, line);
    if (key == "gamma_0") {
      p.gamma_0 = v;
    } else if (key == "gamma_1") {
      p.gamma_1 = v;
    } else {
      const auto it = key_table().find(key);
      if (it == key_table().end())
        throw ConfigError(source_name + ":" + std::to_string(line) + ": unknown key '" + key + "'", line);
      p.*(it->second.field) = v;
    }
  }
  for (const auto& [key, info] : key_table()) {
    if (info.required && seen.find(key) == seen.end())
      throw ConfigError(source_name + ": missing required key '" + key + "'");
  }
  return p;
}

PhysicalParams load_params_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open parameter file '" + path + "'");
  return load_params(in, path);
}

}  // namespace trio
