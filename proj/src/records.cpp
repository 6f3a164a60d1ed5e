// Copyright 2026 The cpwall Authors
// SPDX-License-Identifier: Apache-2.0

#include "cpwall/records.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cpwall {
namespace {

using json = nlohmann::json;

std::string field(const std::optional<double>& x) { return x ? format_double(*x) : ""; }

json value(const std::optional<double>& x) {
  if (!x || !std::isfinite(*x)) return nullptr;
  return *x;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(line);
  while (std::getline(ss, cur, ',')) out.push_back(cur);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::optional<double> parse_field(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw std::runtime_error("bad CSV number '" + s + "'");
  return v;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_eval_csv(std::ostream& out, const EvalRecord& r) {
  out << "z,x0,v_reduced,V_physical,regime,error_estimate\n"
      << format_double(r.z) << ',' << format_double(r.x0) << ',' << format_double(r.v_reduced)
      << ',' << format_double(r.V_physical) << ',' << r.regime << ','
      << format_double(r.error_estimate) << '\n';
}

void write_eval_json(std::ostream& out, const EvalRecord& r) {
  json j = {{"z", r.z},
            {"x0", r.x0},
            {"v_reduced", r.v_reduced},
            {"V_physical", r.V_physical},
            {"regime", r.regime},
            {"error_estimate", r.error_estimate}};
  out << j.dump(2, ' ', false, json::error_handler_t::replace) << '\n';
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& rows) {
  for (std::size_t i = 0; i < kSweepColumns.size(); ++i) {
    out << (i ? "," : "") << kSweepColumns[i];
  }
  out << '\n';
  for (const SweepRecord& r : rows) {
    out << format_double(r.z) << ',' << format_double(r.x0) << ',' << field(r.v_reduced) << ','
        << field(r.V_physical) << ',' << field(r.v_perfect_conductor) << ','
        << field(r.ratio_to_conductor) << ',' << field(r.error_estimate) << '\n';
  }
}

void write_sweep_json(std::ostream& out, const std::vector<SweepRecord>& rows) {
  json arr = json::array();
  for (const SweepRecord& r : rows) {
    arr.push_back({{"z", r.z},
                   {"x0", r.x0},
                   {"v_reduced", value(r.v_reduced)},
                   {"V_physical", value(r.V_physical)},
                   {"v_perfect_conductor", value(r.v_perfect_conductor)},
                   {"ratio_to_conductor", value(r.ratio_to_conductor)},
                   {"error_estimate", value(r.error_estimate)}});
  }
  out << json{{"columns", kSweepColumns}, {"records", arr}}.dump(2) << '\n';
}

std::vector<SweepRecord> read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || split(line) != kSweepColumns) {
    throw std::runtime_error("sweep CSV header mismatch");
  }
  std::vector<SweepRecord> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != kSweepColumns.size()) throw std::runtime_error("sweep CSV row width mismatch");
    const auto z = parse_field(f[0]);
    const auto x0 = parse_field(f[1]);
    if (!z || !x0) throw std::runtime_error("sweep CSV row without z or x0");
    rows.push_back({*z, *x0, parse_field(f[2]), parse_field(f[3]), parse_field(f[4]),
                    parse_field(f[5]), parse_field(f[6])});
  }
  return rows;
}

}  // namespace cpwall
