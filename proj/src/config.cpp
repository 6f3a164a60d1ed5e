// Copyright 2026 The cpwall Authors
// SPDX-License-Identifier: Apache-2.0

#include "cpwall/config.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "cpwall/errors.hpp"

namespace cpwall {
namespace {

using json = nlohmann::json;

void only_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

double number(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw ConfigError(where + "." + key + " is required");
  const json& v = j.at(key);
  if (!v.is_number()) throw ConfigError(where + "." + key + " must be a number");
  return v.get<double>();
}

double number_or(const json& j, const char* key, double fallback, const std::string& where) {
  return j.contains(key) ? number(j, key, where) : fallback;
}

std::string text(const json& j, const char* key, const std::string& fallback,
                 const std::string& where) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_string()) throw ConfigError(where + "." + key + " must be a string");
  return j.at(key).get<std::string>();
}

DielectricModel parse_model(const json& j) {
  const std::string where = "model";
  only_keys(j, {"kind", "epsilon", "chi0", "kc", "table", "interpolation"}, where);
  const std::string kind = text(j, "kind", "", where);
  try {
    if (kind == "constant") {
      return DielectricModel::constant(number(j, "epsilon", where));
    }
    if (kind == "single_relaxation") {
      return DielectricModel::single_relaxation(number(j, "chi0", where), number(j, "kc", where));
    }
    if (kind == "tabulated") {
      if (!j.contains("table") || !j.at("table").is_array()) {
        throw ConfigError("model.table must be an array of [k, epsilon] pairs");
      }
      std::vector<TablePoint> table;
      for (const json& row : j.at("table")) {
        if (!row.is_array() || row.size() != 2 || !row[0].is_number() || !row[1].is_number()) {
          throw ConfigError("model.table rows must be [k, epsilon] number pairs");
        }
        table.push_back({row[0].get<double>(), row[1].get<double>()});
      }
      const std::string rule = text(j, "interpolation", "monotone_cubic", where);
      Interpolation interp;
      if (rule == "linear") {
        interp = Interpolation::linear;
      } else if (rule == "monotone_cubic") {
        interp = Interpolation::monotone_cubic;
      } else {
        throw ConfigError("model.interpolation must be linear or monotone_cubic");
      }
      return DielectricModel::tabulated(std::move(table), interp);
    }
  } catch (const Error& e) {
    throw ConfigError(std::string("model: ") + e.what());
  }
  throw ConfigError("model.kind must be constant, single_relaxation or tabulated");
}

}  // namespace

Units parse_units(const std::string& s) {
  if (s == "si") return Units::si;
  if (s == "atomic") return Units::atomic;
  if (s == "reduced") return Units::reduced;
  throw ConfigError("units must be si, atomic or reduced");
}

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw ConfigError("format must be csv or json");
}

const char* to_string(Units units) {
  switch (units) {
    case Units::si:
      return "si";
    case Units::atomic:
      return "atomic";
    case Units::reduced:
      return "reduced";
  }
  return "reduced";
}

void RunConfig::validate() const {
  if (schema_version != kSchemaVersion) {
    throw ConfigError("schema_version " + std::to_string(schema_version) + " is not supported");
  }
  try {
    atom.validate();
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  if (!(z_grid.min > 0.0) || !std::isfinite(z_grid.min)) {
    throw ConfigError("z_grid.min must be finite and > 0");
  }
  if (!(z_grid.max >= z_grid.min) || !std::isfinite(z_grid.max)) {
    throw ConfigError("z_grid.max must be finite and >= z_grid.min");
  }
  if (z_grid.points < 1) throw ConfigError("z_grid.points must be >= 1");
  if (!(tol >= 1e-12 && tol <= 1e-2)) throw ConfigError("tol must lie in [1e-12, 1e-2]");
}

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  only_keys(j, {"schema_version", "atom", "model", "z_grid", "tol", "units", "output"}, "config");
  RunConfig c;
  if (!j.contains("schema_version") || !j.at("schema_version").is_number_integer()) {
    throw ConfigError("schema_version (integer) is required");
  }
  c.schema_version = j.at("schema_version").get<int>();
  if (j.contains("atom")) {
    only_keys(j.at("atom"), {"k0", "alpha0"}, "atom");
    c.atom.k0 = number_or(j.at("atom"), "k0", c.atom.k0, "atom");
    c.atom.alpha0 = number_or(j.at("atom"), "alpha0", c.atom.alpha0, "atom");
  }
  if (j.contains("model")) c.model = parse_model(j.at("model"));
  if (j.contains("z_grid")) {
    const json& g = j.at("z_grid");
    only_keys(g, {"min", "max", "points", "spacing"}, "z_grid");
    c.z_grid.min = number(g, "min", "z_grid");
    c.z_grid.max = number_or(g, "max", c.z_grid.min, "z_grid");
    if (g.contains("points")) {
      if (!g.at("points").is_number_integer()) throw ConfigError("z_grid.points must be an integer");
      c.z_grid.points = g.at("points").get<int>();
    }
    const std::string sp = text(g, "spacing", "log", "z_grid");
    if (sp == "log") {
      c.z_grid.spacing = Spacing::log;
    } else if (sp == "linear") {
      c.z_grid.spacing = Spacing::linear;
    } else {
      throw ConfigError("z_grid.spacing must be linear or log");
    }
  }
  c.tol = number_or(j, "tol", c.tol, "config");
  c.units = parse_units(text(j, "units", "reduced", "config"));
  if (j.contains("output")) {
    only_keys(j.at("output"), {"path", "format"}, "output");
    c.output.path = text(j.at("output"), "path", "-", "output");
    c.output.format = parse_format(text(j.at("output"), "format", "csv", "output"));
  }
  c.validate();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::vector<double> grid_points(const ZGrid& grid) {
  std::vector<double> z(grid.points);
  if (grid.points == 1) {
    z[0] = grid.min;
    return z;
  }
  for (int i = 0; i < grid.points; ++i) {
    const double s = static_cast<double>(i) / (grid.points - 1);
    if (grid.spacing == Spacing::log) {
      z[i] = grid.min * std::pow(grid.max / grid.min, s);
    } else {
      z[i] = grid.min + (grid.max - grid.min) * s;
    }
  }
  z.front() = grid.min;
  z.back() = grid.max;
  return z;
}

}  // namespace cpwall
