// Copyright 2026 The cpwall Authors
// SPDX-License-Identifier: Apache-2.0

// Permittivity models and the angular weight
//   f(t, eps) = r_TE(|t|, eps) + (1 - 2 t^2) r_TM(|t|, eps)
// with s = sqrt(eps - 1 + t^2), r_TE = (|t| - s)/(|t| + s) and
// r_TM = (eps |t| - s)/(eps |t| + s).

#pragma once

#include <optional>
#include <vector>

namespace cpwall {

enum class ModelKind { constant, single_relaxation, tabulated };
enum class Interpolation { linear, monotone_cubic };

struct TablePoint {
  double k;
  double epsilon;
};

// Immutable permittivity profile eps(k) >= 1.
class DielectricModel {
 public:
  static DielectricModel constant(double epsilon);
  // eps(k) = 1 + chi0 / (1 + (k/kc)^2)
  static DielectricModel single_relaxation(double chi0, double kc);
  // Strictly increasing k grid; no extrapolation outside [k_front, k_back].
  static DielectricModel tabulated(std::vector<TablePoint> table,
                                   Interpolation rule = Interpolation::monotone_cubic);

  ModelKind kind() const noexcept { return kind_; }
  double permittivity(double k) const;

  double epsilon() const noexcept { return epsilon_; }
  double chi0() const noexcept { return chi0_; }
  double kc() const noexcept { return kc_; }
  const std::vector<TablePoint>& table() const noexcept { return table_; }
  Interpolation interpolation() const noexcept { return rule_; }

  // lim eps(k) for k -> infinity; empty for tabulated models.
  std::optional<double> asymptotic_permittivity() const;

 private:
  DielectricModel() = default;

  ModelKind kind_ = ModelKind::constant;
  double epsilon_ = 1.0;
  double chi0_ = 0.0;
  double kc_ = 1.0;
  std::vector<TablePoint> table_;
  std::vector<double> slopes_;
  Interpolation rule_ = Interpolation::monotone_cubic;
};

double permittivity(const DielectricModel& model, double k);

// f(0+, eps) for every eps > 1.
inline constexpr double kAngularWeightAtZero = -2.0;

// eps may be +infinity (perfect conductor) in the functions below.
double fresnel_te(double t, double eps);
double fresnel_tm(double t, double eps);
double angular_weight(double t, double eps);
double angular_weight_derivative(int order, double t, double eps);

struct AngularJet {
  double f;
  double d1;
  double d2;
  double d3;
};

// f and its first three t-derivatives for any t > 0. Beyond t = 1 this is
// the analytic continuation of the propagating-wave expression.
AngularJet angular_weight_jet(double t, double eps);

enum class KappaRegime { small, large };

struct KappaThresholds {
  double small_max = 0.2;
  double large_min = 25.0;
};

// Truncated kappa-expansion of d^3 f / dt^3 (kappa = eps - 1).
double f3_series(double t, double kappa, KappaRegime regime, int n_terms,
                 const KappaThresholds& thresholds = {});

}  // namespace cpwall
