// Copyright 2026 The cpwall Authors
// SPDX-License-Identifier: Apache-2.0

// Output records and their CSV / JSON forms. Doubles are written with 17
// significant digits so a parse reproduces them exactly; a missing value
// is an empty CSV field or JSON null.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cpwall {

struct EvalRecord {
  double z;
  double x0;
  double v_reduced;
  double V_physical;
  std::string regime;
  double error_estimate;
};

struct SweepRecord {
  double z;
  double x0;
  std::optional<double> v_reduced;
  std::optional<double> V_physical;
  std::optional<double> v_perfect_conductor;
  std::optional<double> ratio_to_conductor;
  std::optional<double> error_estimate;
};

inline const std::vector<std::string> kSweepColumns = {
    "z", "x0", "v_reduced", "V_physical", "v_perfect_conductor", "ratio_to_conductor",
    "error_estimate"};

std::string format_double(double x);

void write_eval_csv(std::ostream& out, const EvalRecord& r);
void write_eval_json(std::ostream& out, const EvalRecord& r);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& rows);
void write_sweep_json(std::ostream& out, const std::vector<SweepRecord>& rows);
// Throws std::runtime_error on a header or field mismatch.
std::vector<SweepRecord> read_sweep_csv(std::istream& in);

}  // namespace cpwall
