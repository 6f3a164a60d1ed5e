// Copyright 2026 The cpwall Authors
// SPDX-License-Identifier: Apache-2.0

// Run configuration for the command-line tool, read from JSON.

#pragma once

#include <stdexcept>
#include <string>

#include "cpwall/dielectric.hpp"
#include "cpwall/potential.hpp"

namespace cpwall {

inline constexpr int kSchemaVersion = 1;

// Malformed or out-of-range configuration; maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Spacing { linear, log };
enum class Units { si, atomic, reduced };
enum class Format { csv, json };

struct ZGrid {
  double min = 1.0;
  double max = 1.0;
  int points = 1;
  Spacing spacing = Spacing::log;
};

struct OutputSpec {
  std::string path = "-";  // "-" is standard output
  Format format = Format::csv;
};

struct RunConfig {
  int schema_version = kSchemaVersion;
  AtomParams atom;
  DielectricModel model = DielectricModel::constant(1.0);
  ZGrid z_grid;
  double tol = 1e-8;
  Units units = Units::reduced;
  OutputSpec output;

  // Throws ConfigError.
  void validate() const;
};

RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

Units parse_units(const std::string& s);
Format parse_format(const std::string& s);
const char* to_string(Units units);

// Grid points in ascending order.
std::vector<double> grid_points(const ZGrid& grid);

}  // namespace cpwall
