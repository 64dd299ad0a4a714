// SPDX-License-Identifier: Apache-2.0
//
// triomode: steady state, cooling performance and entanglement structure
// of a three-mode optoacoustic cavity.
//
// Subcommands:
//   derive  --config FILE            derived constants for a parameter file
//   point   --config FILE            full single-point report
//   sweep   --config FILE --sweep k=start:stop:count[:log]   1D/2D CSV sweep
//   recipe  NAME                     run a named preset (see `recipe list`)
//
// Exit codes: 0 success, 1 instability in --strict mode, 2 config/CLI error.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "trio/errors.hpp"
#include "trio/sweep.hpp"

namespace {

trio::AxisSpec parse_axis(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos)
    throw trio::ConfigError("--sweep expects name=start:stop:count[:log], got '" + text + "'");
  trio::AxisSpec axis;
  axis.param = text.substr(0, eq);
  std::vector<std::string> parts;
  std::stringstream body(text.substr(eq + 1));
  std::string token;
  while (std::getline(body, token, ':')) parts.push_back(token);
  if (parts.size() < 3 || parts.size() > 4)
    throw trio::ConfigError("--sweep expects name=start:stop:count[:log], got '" + text + "'");
  try {
    axis.start = std::stod(parts[0]);
    axis.stop = std::stod(parts[1]);
    axis.count = std::stoi(parts[2]);
  } catch (const std::exception&) {
    throw trio::ConfigError("bad number in --sweep '" + text + "'");
  }
  if (parts.size() == 4) {
    if (parts[3] != "log")
      throw trio::ConfigError("bad scale '" + parts[3] + "' in --sweep (only 'log')");
    axis.log_scale = true;
  }
  return axis;
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream body(csv);
  std::string token;
  while (std::getline(body, token, ','))
    if (!token.empty()) out.push_back(token);
  return out;
}

trio::DMode parse_dmode(const std::string& name) {
  if (name == "paper") return trio::DMode::paper;
  if (name == "zero-point") return trio::DMode::zero_point;
  throw trio::ConfigError("--d-mode must be 'paper' or 'zero-point'");
}

// Writes either to stdout or to --out FILE.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw trio::ConfigError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"three-mode optoacoustic cavity: cooling and entanglement calculator"};
  app.require_subcommand(1);

  std::string config_path, out_path, d_mode_name = "paper", recipe_name;
  std::vector<std::string> sweep_args;
  std::string quantities_csv;
  bool strict = false;
  unsigned threads = 0;

  auto add_common = [&](CLI::App* cmd, bool needs_config) {
    auto* opt = cmd->add_option("--config", config_path, "parameter file (key = value lines)");
    if (needs_config) opt->required();
    cmd->add_option("--out", out_path, "output file (default stdout)");
    cmd->add_option("--d-mode", d_mode_name, "diffusion thermal entry: paper | zero-point");
    cmd->add_flag("--strict", strict, "exit 1 when any evaluated point is unstable");
  };

  auto* derive_cmd = app.add_subcommand("derive", "print derived constants");
  add_common(derive_cmd, true);

  auto* point_cmd = app.add_subcommand("point", "full single-point report");
  add_common(point_cmd, true);

  auto* sweep_cmd = app.add_subcommand("sweep", "1D/2D parameter sweep, CSV output");
  add_common(sweep_cmd, true);
  sweep_cmd->add_option("--sweep", sweep_args, "axis as name=start:stop:count[:log] (max 2)")
      ->required()
      ->expected(1, 2);
  sweep_cmd->add_option("--quantities", quantities_csv, "comma-separated quantity names");
  sweep_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");

  auto* recipe_cmd = app.add_subcommand("recipe", "run a named preset");
  recipe_cmd->add_option("name", recipe_name, "fig3 | fig4 | fig5 | cooling-benchmark | list")
      ->required();
  add_common(recipe_cmd, false);
  recipe_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const trio::DMode d_mode = parse_dmode(d_mode_name);
    Output output(out_path);

    if (app.got_subcommand(derive_cmd)) {
      const auto params = trio::load_params_file(config_path);
      trio::print_derived(trio::derive_params(params), output.stream());
      return 0;
    }

    if (app.got_subcommand(point_cmd)) {
      const auto params = trio::load_params_file(config_path);
      const auto report = trio::run_point(params, d_mode);
      trio::print_point_report(report, output.stream());
      return (strict && !report.stab.stable) ? 1 : 0;
    }

    if (app.got_subcommand(sweep_cmd)) {
      const auto params = trio::load_params_file(config_path);
      trio::SweepSpec spec;
      for (const auto& arg : sweep_args) spec.axes.push_back(parse_axis(arg));
      spec.quantities =
          quantities_csv.empty() ? trio::known_quantities() : split_list(quantities_csv);
      const auto stats =
          trio::run_sweep(spec, params, d_mode, output.stream(), threads);
      return (strict && stats.unstable > 0) ? 1 : 0;
    }

    // recipe
    if (recipe_name == "list") {
      for (const auto& r : trio::recipes())
        output.stream() << r.name << ": " << r.summary << "\n";
      return 0;
    }
    trio::Recipe recipe = trio::find_recipe(recipe_name);
    recipe.d_mode = d_mode;
    if (!config_path.empty()) recipe.config = trio::load_params_file(config_path);
    const auto stats = trio::run_recipe(recipe, output.stream(), threads);
    return (strict && stats.unstable > 0) ? 1 : 0;
  } catch (const trio::UnstableSystemError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return strict ? 1 : 2;
  } catch (const trio::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
