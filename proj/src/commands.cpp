// Copyright 2026 The cpwall Authors
// SPDX-License-Identifier: Apache-2.0

#include "cpwall/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <ostream>
#include <thread>
#include <utility>

#include "cpwall/errors.hpp"
#include "cpwall/potential.hpp"
#include "cpwall/special_functions.hpp"

namespace cpwall {
namespace {

using json = nlohmann::json;

PotentialResult reduced(const RunConfig& c, double x0) {
  if (c.model.kind() == ModelKind::constant) {
    return reduced_potential_nondispersive(x0, c.model.epsilon(), c.tol);
  }
  return reduced_potential_dispersive(x0, c.model, c.atom, c.tol);
}

// Reduced mode measures V in hbar c with the configured length unit and
// uses no physical constants.
double physical(const RunConfig& c, double v, double z) {
  if (c.units == Units::reduced) return v * c.atom.alpha0 * c.atom.k0 / (z * z * z);
  const UnitSystem u = c.units == Units::si ? UnitSystem::si : UnitSystem::atomic;
  return to_physical({v, 0.0, Regime::general}, c.atom, z, u);
}

double x0_of(const RunConfig& c, double z) { return 2.0 * c.atom.k0 * z; }

void emit_table(std::ostream& out, Format format, const std::vector<std::string>& columns,
                const std::vector<std::vector<std::optional<double>>>& rows) {
  if (format == Format::csv) {
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << (i ? "," : "") << (row[i] ? format_double(*row[i]) : "");
      }
      out << '\n';
    }
    return;
  }
  json arr = json::array();
  for (const auto& row : rows) {
    json o = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      o[columns[i]] = row[i] ? json(*row[i]) : json(nullptr);
    }
    arr.push_back(o);
  }
  out << json{{"columns", columns}, {"records", arr}}.dump(2) << '\n';
}

std::string short_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace

EvalRecord evaluate_point(const RunConfig& config, double z) {
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("evaluate_point: z must be > 0");
  const double x0 = x0_of(config, z);
  const PotentialResult r = reduced(config, x0);
  return {z, x0, r.v_reduced, physical(config, r.v_reduced, z), to_string(r.regime),
          r.error_estimate};
}

SweepRecord sweep_point(const RunConfig& config, double z, std::string* failure) {
  SweepRecord rec{z, x0_of(config, z), {}, {}, {}, {}, {}};
  try {
    const PotentialResult r = reduced(config, rec.x0);
    const double v0 = perfect_conductor_reduced(rec.x0).v_reduced;
    rec.v_reduced = r.v_reduced;
    rec.V_physical = physical(config, r.v_reduced, z);
    rec.v_perfect_conductor = v0;
    rec.ratio_to_conductor = r.v_reduced / v0;
    rec.error_estimate = r.error_estimate;
  } catch (const std::exception& e) {
    if (failure) *failure = e.what();
  }
  return rec;
}

int run_eval(const RunConfig& config, double z, std::ostream& out, std::ostream& err) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    err << "error: --z must be finite and > 0\n";
    return kExitConfig;
  }
  EvalRecord rec;
  try {
    rec = evaluate_point(config, z);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  if (config.output.format == Format::csv) {
    write_eval_csv(out, rec);
  } else {
    write_eval_json(out, rec);
  }
  return kExitOk;
}

int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err, unsigned threads) {
  if (config.z_grid.points < 2) {
    err << "error: sweep needs z_grid.points >= 2\n";
    return kExitConfig;
  }
  const std::vector<double> z = grid_points(config.z_grid);
  std::vector<SweepRecord> rows(z.size());
  std::vector<std::string> failures(z.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(z.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < z.size(); i = next++) {
      rows[i] = sweep_point(config, z[i], &failures[i]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t + 1 < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  int status = kExitOk;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (!rows[i].v_reduced) {
      err << "error at z = " << format_double(z[i]) << ": " << failures[i] << '\n';
      status = kExitNumerical;
    }
  }
  if (config.output.format == Format::csv) {
    write_sweep_csv(out, rows);
  } else {
    write_sweep_json(out, rows);
  }
  return status;
}

int run_limits(double eps, Format format, std::ostream& out, std::ostream& err) {
  if (std::isnan(eps) || eps < 1.0) {
    err << "error: limits needs eps >= 1\n";
    return kExitConfig;
  }
  const double kappa = eps - 1.0;
  std::vector<std::pair<std::string, double>> q;
  int status = kExitOk;
  auto add = [&](const std::string& name, auto f) {
    try {
      q.emplace_back(name, f());
    } catch (const std::exception& e) {
      err << "error: " << name << ": " << e.what() << '\n';
      status = kExitNumerical;
    }
  };
  const KappaThresholds th;
  add("eps", [&] { return eps; });
  add("kappa", [&] { return kappa; });
  add("short_range_v", [&] { return short_range_reduced(eps); });
  add("short_range_factor_numeric", [&] { return short_range_bracket_numeric(eps); });
  add("long_range_factor_numeric", [&] { return long_range_bracket_numeric(eps); });
  add("long_range_v_times_x0",
      [&] { return -3.0 / (4.0 * sf::kPi) * long_range_bracket_numeric(eps); });
  if (kappa > 0.0 && kappa <= th.small_max) {
    for (int n = 1; n <= 3; ++n) {
      add("long_range_factor_small_" + std::to_string(n),
          [&] { return long_range_factor(kappa, {KappaRegime::small, n}); });
    }
    add("short_range_factor_series_small",
        [&] { return short_range_series_bracket(kappa, {KappaRegime::small, 1}); });
  }
  if (kappa >= th.large_min && std::isfinite(kappa)) {
    for (int n = 1; n <= 3; ++n) {
      add("long_range_factor_large_" + std::to_string(n),
          [&] { return long_range_factor(kappa, {KappaRegime::large, n}); });
    }
    add("short_range_factor_series_large",
        [&] { return short_range_series_bracket(kappa, {KappaRegime::large, 1}); });
  }
  if (format == Format::csv) {
    out << "quantity,value\n";
    for (const auto& [k, v] : q) out << k << ',' << format_double(v) << '\n';
  } else {
    json j = json::object();
    for (const auto& [k, v] : q) j[k] = v;
    out << j.dump(2) << '\n';
  }
  return status;
}

int run_nonadd(Format format, std::ostream& out, std::ostream& err) {
  std::vector<std::vector<std::optional<double>>> rows;
  try {
    for (int i = 1; i <= 10; ++i) {
      const double kappa = 0.02 * i;
      rows.push_back({kappa, nonadditivity_ratio(kappa, 1), nonadditivity_ratio(kappa, 2),
                      nonadditivity_ratio(kappa, 3),
                      long_range_factor(kappa, {KappaRegime::small, 3}),
                      pairwise_integrated_factor(kappa, 3), long_range_bracket_numeric(1.0 + kappa)});
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  emit_table(out, format,
             {"kappa", "ratio_1", "ratio_2", "ratio_3", "long_range_factor",
              "pairwise_bracket", "long_range_factor_numeric"},
             rows);
  return kExitOk;
}

int run_validate(validation::Level level, Format format, std::ostream& out,
                 const validation::Hooks& hooks) {
  const std::vector<validation::CheckResult> checks = validation::run(level, hooks);
  const bool ok = std::all_of(checks.begin(), checks.end(),
                              [](const validation::CheckResult& c) { return c.passed; });
  if (format == Format::json) {
    json arr = json::array();
    for (const auto& c : checks) {
      arr.push_back({{"criterion", c.criterion},
                     {"name", c.name},
                     {"passed", c.passed},
                     {"measured", c.measured},
                     {"expected", c.expected},
                     {"tolerance", c.tolerance},
                     {"seconds", c.seconds},
                     {"detail", c.detail}});
    }
    out << json{{"passed", ok}, {"checks", arr}}.dump(2) << '\n';
  } else {
    for (const auto& c : checks) {
      out << (c.passed ? "PASS " : "FAIL ") << '[' << c.criterion << "] " << c.name
          << ": measured " << short_double(c.measured) << ", expected "
          << short_double(c.expected) << ", tolerance " << short_double(c.tolerance) << " ("
          << c.detail << ")\n";
    }
    const auto passed = std::count_if(checks.begin(), checks.end(),
                                      [](const validation::CheckResult& c) { return c.passed; });
    out << passed << '/' << checks.size() << " checks passed\n";
  }
  return ok ? kExitOk : kExitNumerical;
}

}  // namespace cpwall
