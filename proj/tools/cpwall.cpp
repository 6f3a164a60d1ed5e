// Copyright 2026 The cpwall Authors
// SPDX-License-Identifier: Apache-2.0

// cpwall: atom-wall potential evaluations, sweeps and self-validation.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "cpwall/commands.hpp"
#include "cpwall/errors.hpp"
#include "cpwall/special_functions.hpp"

namespace {

struct Options {
  std::string config;
  std::optional<double> z;
  std::optional<double> eps;
  std::optional<std::string> units;
  std::optional<double> tol;
  std::optional<std::string> output;
  std::optional<std::string> format;
  std::string level = "quick";
  unsigned threads = 0;
  double perturb = 0.0;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config, "JSON run configuration");
  cmd->add_option("--eps", o.eps, "Use a constant permittivity instead of the configured model");
  cmd->add_option("--units", o.units, "Unit system for V_physical")
      ->check(CLI::IsMember({"si", "atomic", "reduced"}));
  cmd->add_option("--tol", o.tol, "Absolute tolerance on the reduced potential");
  cmd->add_option("--output", o.output, "Output path, - for standard output");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

cpwall::RunConfig build_config(const Options& o) {
  cpwall::RunConfig c = o.config.empty() ? cpwall::RunConfig{} : cpwall::load_config(o.config);
  if (o.eps) {
    if (std::isnan(*o.eps) || *o.eps < 1.0) throw cpwall::ConfigError("--eps must be >= 1");
    c.model = cpwall::DielectricModel::constant(*o.eps);
  }
  if (o.units) c.units = cpwall::parse_units(*o.units);
  if (o.tol) c.tol = *o.tol;
  if (o.output) c.output.path = *o.output;
  if (o.format) c.output.format = cpwall::parse_format(*o.format);
  c.validate();
  return c;
}

int run(const std::string& command, const Options& o) {
  using namespace cpwall;
  RunConfig config;
  try {
    config = build_config(o);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }

  std::ofstream file;
  if (config.output.path != "-") {
    file.open(config.output.path);
    if (!file) {
      std::cerr << "config error: cannot write " << config.output.path << '\n';
      return kExitConfig;
    }
  }
  std::ostream& out = file.is_open() ? file : std::cout;
  const Format format = config.output.format;

  if (command == "eval") {
    if (!o.z) {
      std::cerr << "config error: eval needs --z\n";
      return kExitConfig;
    }
    return run_eval(config, *o.z, out, std::cerr);
  }
  if (command == "sweep") return run_sweep(config, out, std::cerr, o.threads);
  if (command == "limits") {
    double eps = 0.0;
    if (o.eps) {
      eps = *o.eps;
    } else if (config.model.kind() == ModelKind::constant) {
      eps = config.model.epsilon();
    } else {
      std::cerr << "config error: limits needs a constant model or --eps\n";
      return kExitConfig;
    }
    return run_limits(eps, format, out, std::cerr);
  }
  if (command == "nonadd") return run_nonadd(format, out, std::cerr);
  if (command == "validate") {
    validation::Hooks hooks;
    if (o.perturb != 0.0) {
      const double p = o.perturb;
      hooks.aux_F = [p](double x) { return sf::aux_F(x) + p * std::sin(3.0 * x); };
    }
    const auto level = o.level == "full" ? validation::Level::full : validation::Level::quick;
    return run_validate(level, format, out, hooks);
  }
  return kExitConfig;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Atom-wall dispersion potential calculator"};
  app.require_subcommand(1);
  Options o;

  CLI::App* eval = app.add_subcommand("eval", "Potential at one distance");
  add_common(eval, o);
  eval->add_option("--z", o.z, "Atom-wall distance")->required();

  CLI::App* sweep = app.add_subcommand("sweep", "Potential over the configured z grid");
  add_common(sweep, o);
  sweep->add_option("--threads", o.threads, "Worker threads (0 = all cores)");

  CLI::App* limits = app.add_subcommand("limits", "Asymptotic values and series factors");
  add_common(limits, o);

  CLI::App* nonadd = app.add_subcommand("nonadd", "Non-additivity table over kappa");
  add_common(nonadd, o);

  CLI::App* validate = app.add_subcommand("validate", "Run the self-validation suite");
  add_common(validate, o);
  validate->add_option("--level", o.level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  // Test-harness hook: adds p sin(3x) to F in the special-function checks.
  validate->add_option("--perturb-aux-f", o.perturb)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? cpwall::kExitOk : cpwall::kExitConfig;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const cpwall::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return cpwall::kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cpwall::kExitNumerical;
  }
}
