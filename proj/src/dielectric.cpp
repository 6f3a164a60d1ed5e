// Copyright 2026 The cpwall Authors
// SPDX-License-Identifier: Apache-2.0

#include "cpwall/dielectric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cpwall/errors.hpp"
#include "taylor.hpp"

namespace cpwall {
namespace {

void check_eps(double eps, const char* op) {
  if (std::isnan(eps) || eps < 1.0) {
    throw ValidityError(std::string(op) + ": permittivity must be >= 1, got " +
                        std::to_string(eps));
  }
}

void check_t_propagating(double t, const char* op) {
  const double a = std::abs(t);
  if (std::isnan(t) || a > 1.0) {
    throw DomainError(std::string(op) + ": |t| must not exceed 1");
  }
  if (a == 0.0) {
    throw SingularPointError(std::string(op) +
                             ": t = 0 is singular; use the limit kAngularWeightAtZero");
  }
}

double sgn(double v) { return (v > 0.0) - (v < 0.0); }

// Shape-preserving Hermite slopes of the three-point type.
std::vector<double> pchip_slopes(const std::vector<TablePoint>& p) {
  const std::size_t n = p.size();
  std::vector<double> h(n - 1), del(n - 1), d(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = p[i + 1].k - p[i].k;
    del[i] = (p[i + 1].epsilon - p[i].epsilon) / h[i];
  }
  if (n == 2) {
    d[0] = d[1] = del[0];
    return d;
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (del[i - 1] * del[i] <= 0.0) continue;
    const double w1 = 2.0 * h[i] + h[i - 1];
    const double w2 = h[i] + 2.0 * h[i - 1];
    d[i] = (w1 + w2) / (w1 / del[i - 1] + w2 / del[i]);
  }
  auto end_slope = [](double h0, double h1, double d0, double d1) {
    double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (sgn(s) != sgn(d0)) return 0.0;
    if (sgn(d0) != sgn(d1) && std::abs(s) > 3.0 * std::abs(d0)) return 3.0 * d0;
    return s;
  };
  d[0] = end_slope(h[0], h[1], del[0], del[1]);
  d[n - 1] = end_slope(h[n - 2], h[n - 3], del[n - 2], del[n - 3]);
  return d;
}

template <class T>
T weight_expr(const T& t, double eps) {
  const double kappa = eps - 1.0;
  const T s = detail::sqrt(kappa + t * t);
  const T a = t + s;
  const T b = eps * t + s;
  const T rte = -kappa / (a * a);
  const T rtm = kappa * ((eps + 1.0) * (t * t) - 1.0) / (b * b);
  return rte + (1.0 - 2.0 * (t * t)) * rtm;
}

}  // namespace

DielectricModel DielectricModel::constant(double epsilon) {
  if (!std::isfinite(epsilon) || epsilon < 1.0) {
    throw ValidityError("constant model: epsilon must be finite and >= 1");
  }
  DielectricModel m;
  m.kind_ = ModelKind::constant;
  m.epsilon_ = epsilon;
  return m;
}

DielectricModel DielectricModel::single_relaxation(double chi0, double kc) {
  if (!std::isfinite(chi0) || chi0 < 0.0) {
    throw ValidityError("single_relaxation model: chi0 must be finite and >= 0");
  }
  if (!std::isfinite(kc) || !(kc > 0.0)) {
    throw ValidityError("single_relaxation model: kc must be finite and > 0");
  }
  DielectricModel m;
  m.kind_ = ModelKind::single_relaxation;
  m.chi0_ = chi0;
  m.kc_ = kc;
  m.epsilon_ = 1.0 + chi0;
  return m;
}

DielectricModel DielectricModel::tabulated(std::vector<TablePoint> table,
                                           Interpolation rule) {
  if (table.size() < 2) throw ValidityError("tabulated model: need at least 2 samples");
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& p = table[i];
    if (!std::isfinite(p.k) || p.k < 0.0) {
      throw ValidityError("tabulated model: k must be finite and >= 0");
    }
    if (!std::isfinite(p.epsilon) || p.epsilon < 1.0) {
      throw ValidityError("tabulated model: sample " + std::to_string(i) +
                          " has epsilon < 1");
    }
    if (i > 0 && !(p.k > table[i - 1].k)) {
      throw ValidityError("tabulated model: k grid must be strictly increasing");
    }
  }
  DielectricModel m;
  m.kind_ = ModelKind::tabulated;
  m.rule_ = rule;
  m.table_ = std::move(table);
  if (rule == Interpolation::monotone_cubic) m.slopes_ = pchip_slopes(m.table_);
  m.epsilon_ = m.table_.front().epsilon;
  return m;
}

double DielectricModel::permittivity(double k) const {
  if (std::isnan(k) || k < 0.0) throw DomainError("permittivity: k must be >= 0");
  switch (kind_) {
    case ModelKind::constant:
      return epsilon_;
    case ModelKind::single_relaxation: {
      if (std::isinf(k)) return 1.0;
      const double q = k / kc_;
      return 1.0 + chi0_ / (1.0 + q * q);
    }
    case ModelKind::tabulated: {
      if (k < table_.front().k || k > table_.back().k) {
        throw ValidityError("permittivity: k = " + std::to_string(k) +
                            " outside the tabulated range");
      }
      auto it = std::upper_bound(table_.begin(), table_.end(), k,
                                 [](double v, const TablePoint& p) { return v < p.k; });
      std::size_t i = (it == table_.end()) ? table_.size() - 2
                                           : static_cast<std::size_t>(it - table_.begin()) - 1;
      const auto& a = table_[i];
      const auto& b = table_[i + 1];
      const double h = b.k - a.k;
      const double u = (k - a.k) / h;
      double eps;
      if (rule_ == Interpolation::linear) {
        eps = a.epsilon + u * (b.epsilon - a.epsilon);
      } else {
        const double u2 = u * u, u3 = u2 * u;
        eps = (2 * u3 - 3 * u2 + 1) * a.epsilon + (u3 - 2 * u2 + u) * h * slopes_[i] +
              (-2 * u3 + 3 * u2) * b.epsilon + (u3 - u2) * h * slopes_[i + 1];
      }
      if (!(eps >= 1.0)) throw ValidityError("permittivity: interpolated epsilon < 1");
      return eps;
    }
  }
  return epsilon_;
}

std::optional<double> DielectricModel::asymptotic_permittivity() const {
  switch (kind_) {
    case ModelKind::constant:
      return epsilon_;
    case ModelKind::single_relaxation:
      return 1.0;
    case ModelKind::tabulated:
      return std::nullopt;
  }
  return std::nullopt;
}

double permittivity(const DielectricModel& model, double k) {
  return model.permittivity(k);
}

double fresnel_te(double t, double eps) {
  check_t_propagating(t, "fresnel_te");
  check_eps(eps, "fresnel_te");
  if (std::isinf(eps)) return -1.0;
  const double a = std::abs(t);
  const double kappa = eps - 1.0;
  const double s = std::sqrt(kappa + a * a);
  // (a - s)/(a + s) with the difference a - s = -kappa/(a + s) taken exactly
  return -kappa / ((a + s) * (a + s));
}

double fresnel_tm(double t, double eps) {
  check_t_propagating(t, "fresnel_tm");
  check_eps(eps, "fresnel_tm");
  if (std::isinf(eps)) return 1.0;
  const double a = std::abs(t);
  const double kappa = eps - 1.0;
  const double s = std::sqrt(kappa + a * a);
  const double b = eps * a + s;
  return kappa * ((eps + 1.0) * (a * a) - 1.0) / (b * b);
}

double angular_weight(double t, double eps) {
  check_t_propagating(t, "angular_weight");
  const double a = std::abs(t);
  return fresnel_te(a, eps) + (1.0 - 2.0 * a * a) * fresnel_tm(a, eps);
}

AngularJet angular_weight_jet(double t, double eps) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw DomainError("angular_weight_jet: t must be finite and > 0");
  }
  check_eps(eps, "angular_weight_jet");
  if (std::isinf(eps)) return {-2.0 * t * t, -4.0 * t, -4.0, 0.0};
  using T3 = detail::Taylor<3>;
  const T3 f = weight_expr(T3::variable(t), eps);
  return {f.c[0], f.derivative(1), f.derivative(2), f.derivative(3)};
}

double angular_weight_derivative(int order, double t, double eps) {
  if (order < 1 || order > 3) {
    throw UnsupportedOrderError("angular_weight_derivative: order must be 1, 2 or 3");
  }
  if (std::isnan(t) || t > 1.0 || t < 0.0) {
    throw DomainError("angular_weight_derivative: t must lie in (0, 1]");
  }
  if (t == 0.0) {
    throw SingularPointError("angular_weight_derivative: derivatives diverge at t = 0");
  }
  const AngularJet j = angular_weight_jet(t, eps);
  return order == 1 ? j.d1 : order == 2 ? j.d2 : j.d3;
}

double f3_series(double t, double kappa, KappaRegime regime, int n_terms,
                 const KappaThresholds& thresholds) {
  if (n_terms < 1 || n_terms > 3) {
    throw UnsupportedOrderError("f3_series: n_terms must be 1, 2 or 3");
  }
  if (!(t > 0.0) || t > 1.0) throw DomainError("f3_series: t must lie in (0, 1]");
  if (std::isnan(kappa) || kappa < 0.0) throw DomainError("f3_series: kappa must be >= 0");
  const double t2 = t * t;
  const double t4 = t2 * t2;
  const double t5 = t4 * t;
  if (regime == KappaRegime::small) {
    if (kappa > thresholds.small_max) {
      throw PreconditionError("f3_series: small-kappa series needs kappa <= " +
                              std::to_string(thresholds.small_max));
    }
    double v = 12.0 * kappa / t5;
    if (n_terms >= 2) v += (6.0 - 30.0 / t2) * kappa * kappa / t5;
    if (n_terms >= 3) {
      v -= (3.0 + 15.0 / t2 - 105.0 / (2.0 * t4)) * kappa * kappa * kappa / t5;
    }
    return v;
  }
  if (!(kappa >= thresholds.large_min)) {
    throw PreconditionError("f3_series: large-kappa series needs kappa >= " +
                            std::to_string(thresholds.large_min));
  }
  if (std::isinf(kappa)) return 0.0;
  const double rk = std::sqrt(kappa);
  double v = 12.0 / (t4 * rk);
  if (n_terms >= 2) v -= 48.0 / (t5 * kappa);
  if (n_terms >= 3) v += (18.0 - 36.0 / t4 + 120.0 / (t4 * t2)) / (kappa * rk);
  return v;
}

}  // namespace cpwall
