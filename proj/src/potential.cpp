// Copyright 2026 The cpwall Authors
// SPDX-License-Identifier: Apache-2.0

#include "cpwall/potential.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "cpwall/errors.hpp"
#include "cpwall/quadrature.hpp"
#include "cpwall/special_functions.hpp"

namespace cpwall {
namespace {

constexpr double kPi = sf::kPi;

void check_x0(double x0, const char* op) {
  if (!(x0 > 0.0) || !std::isfinite(x0)) {
    throw DomainError(std::string(op) + ": x0 must be finite and > 0");
  }
}

void check_eps(double eps, const char* op) {
  if (std::isnan(eps) || eps < 1.0) {
    throw ValidityError(std::string(op) + ": eps must be >= 1");
  }
}

void check_tol(double tol, const char* op) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw DomainError(std::string(op) + ": tol must be finite and > 0");
  }
}

// Boundary part of the integrated-by-parts potential,
//   [f x0^2 - f''] F + f' x0 G - x0 f  =  -f x0^2 F'' - f'' F + f' x0 G,
// written with F'' = 1/x - F so no cancellation occurs at large x0.
double boundary_terms(double x0, const AngularJet& f) {
  if (f.f == 0.0 && f.d1 == 0.0 && f.d2 == 0.0) return 0.0;
  const double F = sf::aux_F(x0);
  const double G = sf::aux_G(x0);
  const double F2 = sf::aux_F_derivative(2, x0);
  return -f.f * x0 * x0 * F2 - f.d2 * F + f.d1 * x0 * G;
}

// int_1^inf h(p) dp through p = 1/u.
QuadratureResult integrate_beyond_one(const std::function<double(double)>& h, double tol,
                                      std::vector<double> breakpoints = {}) {
  AdaptiveOptions ao;
  ao.breakpoints = std::move(breakpoints);
  ao.rel_tol = 1e-12;
  return adaptive_integrate(
      [&](double u) {
        const double p = 1.0 / u;
        return h(p) * p * p;
      },
      0.0, 1.0, tol, ao);
}

std::vector<double> x0_breakpoints(double x0) {
  std::vector<double> b;
  for (double s : {0.1, 1.0, 10.0}) {
    const double u = s * x0;
    if (u > 0.0 && u < 1.0) b.push_back(u);
  }
  return b;
}

}  // namespace

void AtomParams::validate() const {
  if (!(k0 > 0.0) || !std::isfinite(k0)) throw DomainError("AtomParams: k0 must be > 0");
  if (!(alpha0 > 0.0) || !std::isfinite(alpha0)) {
    throw DomainError("AtomParams: alpha0 must be > 0");
  }
}

ReducedPoint ReducedPoint::at(const AtomParams& atom, double z) {
  atom.validate();
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("ReducedPoint: z must be > 0");
  return {2.0 * atom.k0 * z, z};
}

const char* to_string(Regime regime) {
  switch (regime) {
    case Regime::general:
      return "general";
    case Regime::short_asymptotic:
      return "short_asymptotic";
    case Regime::long_asymptotic:
      return "long_asymptotic";
    case Regime::perfect_conductor:
      return "perfect_conductor";
  }
  return "general";
}

PhysicalConstants constants(UnitSystem units) {
  if (units == UnitSystem::si) return {1.054571817e-34, 299792458.0};
  return {1.0, 137.035999084};
}

double two_level_susceptibility(double omega, const AtomParams& atom, UnitSystem units) {
  atom.validate();
  if (std::isnan(omega)) throw DomainError("two_level_susceptibility: omega is NaN");
  if (std::isinf(omega)) return 0.0;
  const double w0 = atom.k0 * constants(units).c;
  if (std::abs(std::abs(omega) - w0) <= 1e-12 * w0) {
    throw PoleError("two_level_susceptibility: omega is on the transition resonance");
  }
  return 0.5 * atom.alpha0 * w0 * (1.0 / (w0 + omega) + 1.0 / (w0 - omega));
}

PotentialResult perfect_conductor_reduced(double x0) {
  check_x0(x0, "perfect_conductor_reduced");
  const double F = sf::aux_F(x0);
  const double G = sf::aux_G(x0);
  const double F2 = sf::aux_F_derivative(2, x0);
  // (x0^2 - 2) F + 2 x0 G - x0 = -x0^2 F'' - 2 F + 2 x0 G
  const double bracket = -x0 * x0 * F2 - 2.0 * F + 2.0 * x0 * G;
  const double v = bracket / (8.0 * kPi);
  const double scale = (x0 * x0 * std::abs(F2) + 2.0 * std::abs(F) + 2.0 * x0 * std::abs(G)) /
                       (8.0 * kPi);
  return {v, 1e-13 * scale, Regime::perfect_conductor};
}

PotentialResult reduced_potential_nondispersive(double x0, double eps, double tol) {
  check_x0(x0, "reduced_potential_nondispersive");
  check_eps(eps, "reduced_potential_nondispersive");
  check_tol(tol, "reduced_potential_nondispersive");
  if (eps == 1.0) return {0.0, 0.0, Regime::general};

  const AngularJet f1 = angular_weight_jet(1.0, eps);
  const double bnd = boundary_terms(x0, f1);
  // Finite part of int_0^1 f'''(t) F(x0 t) dt. Power divergences at t = 0
  // carry no scale, so FP int_0^inf vanishes and the finite part equals
  // minus the convergent remainder int_1^inf.
  double j = 0.0;
  double j_err = 0.0;
  if (!std::isinf(eps)) {
    const QuadratureResult r = integrate_beyond_one(
        [&](double p) { return angular_weight_jet(p, eps).d3 * sf::aux_F(x0 * p); },
        0.5 * 16.0 * kPi * tol, x0_breakpoints(x0));
    j = -r.value;
    j_err = r.error_estimate;
  }
  const double v = -(bnd + j) / (16.0 * kPi);
  const double err = (j_err + 1e-14 * (std::abs(bnd) + std::abs(j))) / (16.0 * kPi);
  return {v, err, Regime::general};
}

PotentialResult reduced_potential_dispersive(double x0, const DielectricModel& model,
                                             const AtomParams& atom, double tol) {
  check_x0(x0, "reduced_potential_dispersive");
  check_tol(tol, "reduced_potential_dispersive");
  atom.validate();
  const std::optional<double> eps_inf_opt = model.asymptotic_permittivity();
  if (!eps_inf_opt) {
    throw DivergentTailError(
        "reduced_potential_dispersive: a tabulated model has no large-k limit");
  }
  const double eps_inf = *eps_inf_opt;

  // Decay check: (eps(k) - eps_inf) k^2 must stay bounded.
  const double k_scale = model.kind() == ModelKind::single_relaxation
                             ? std::max(atom.k0, model.kc())
                             : atom.k0;
  double peak = 0.0;
  double last = 0.0;
  for (int j = 0; j <= 12; ++j) {
    const double k = k_scale * std::pow(10.0, j);
    last = std::abs(model.permittivity(k) - eps_inf) * k * k;
    peak = std::max(peak, last);
  }
  if (last > 2.0 * peak * (1.0 + 1e-12) || !std::isfinite(last)) {
    throw DivergentTailError(
        "reduced_potential_dispersive: (eps(k) - eps_inf) k^2 grows at large k");
  }

  const double k_per_x = atom.k0 / x0;  // k = x / (2z)
  const double T = 16.0 * kPi * tol;
  double x_break = std::max({10.0 * x0, 10.0});
  if (model.kind() == ModelKind::single_relaxation) {
    x_break = std::max(x_break, 4.0 * model.kc() / k_per_x);
  }
  const double inner_tol = 0.05 * T / (1.0 + std::log1p(x_break / x0));
  const AngularJet f_inf = angular_weight_jet(1.0, eps_inf);

  double max_inner_err = 0.0;
  // H(x) = int_1^inf f'''(p, e) sin(x p) dp
  auto inner = [&](double x, double e) {
    if (e == 1.0 || x == 0.0) return 0.0;
    QuadratureResult r;
    if (x <= 2.0) {
      r = integrate_beyond_one(
          [&](double p) { return angular_weight_jet(p, e).d3 * std::sin(x * p); }, inner_tol);
    } else {
      OscillatoryOptions oo;
      oo.wavelength = 2.0 * kPi / x;
      r = semiinfinite_oscillatory_integrate(
          [&](double q) {
            const double p = 1.0 + q;
            return angular_weight_jet(p, e).d3 * std::sin(x * p);
          },
          2.0 * oo.wavelength, inner_tol, oo);
    }
    max_inner_err = std::max(max_inner_err, r.error_estimate);
    return r.value;
  };

  auto outer = [&](double x) {
    const double e = model.permittivity(x * k_per_x);
    double d0 = 0.0, d1 = 0.0, d2 = 0.0;
    if (e != eps_inf) {
      const AngularJet fe = angular_weight_jet(1.0, e);
      d0 = fe.f - f_inf.f;
      d1 = fe.d1 - f_inf.d1;
      d2 = fe.d2 - f_inf.d2;
    }
    const double s = std::sin(x);
    const double c = std::cos(x);
    return (x * x * s * d0 + x * c * d1 - s * d2 - inner(x, e)) / (x + x0);
  };

  OscillatoryOptions oo;
  oo.wavelength = 2.0 * kPi;
  const QuadratureResult r = semiinfinite_oscillatory_integrate(outer, x_break, 0.5 * T, oo);
  const double bnd = boundary_terms(x0, f_inf);
  const double v = -(bnd + r.value) / (16.0 * kPi);
  const double err =
      (r.error_estimate + max_inner_err * (1.0 + std::log1p(x_break / x0)) +
       1e-14 * std::abs(bnd)) /
      (16.0 * kPi);
  return {v, err, Regime::general};
}

PotentialResult asymptotic_potential(double x0, double eps,
                                     const RegimeThresholds& thresholds) {
  check_x0(x0, "asymptotic_potential");
  check_eps(eps, "asymptotic_potential");
  if (x0 <= thresholds.short_x0_max) {
    return {short_range_reduced(eps), 0.0, Regime::short_asymptotic};
  }
  if (x0 >= thresholds.long_x0_min) {
    return {-3.0 / (4.0 * kPi * x0) * long_range_bracket_numeric(eps), 0.0,
            Regime::long_asymptotic};
  }
  throw PreconditionError("asymptotic_potential: x0 lies between the short and long regimes");
}

double short_range_reduced(double eps) {
  check_eps(eps, "short_range_reduced");
  if (std::isinf(eps)) return -0.125;
  return -0.125 * (eps - 1.0) / (eps + 1.0);
}

double long_range_factor(double kappa, const SeriesSpec& spec,
                         const KappaThresholds& thresholds) {
  if (spec.n_terms < 1 || spec.n_terms > 3) {
    throw UnsupportedOrderError("long_range_factor: n_terms must be 1, 2 or 3");
  }
  if (std::isnan(kappa) || kappa < 0.0) throw DomainError("long_range_factor: kappa < 0");
  if (spec.regime == KappaRegime::large) {
    if (kappa < thresholds.large_min) {
      throw PreconditionError("long_range_factor: large-kappa series needs kappa >= " +
                              std::to_string(thresholds.large_min));
    }
    if (std::isinf(kappa)) return 1.0;
    double g = 1.0;
    if (spec.n_terms >= 2) g -= 5.0 / (4.0 * std::sqrt(kappa));
    if (spec.n_terms >= 3) g += 22.0 / (15.0 * kappa);
    return g;
  }
  if (kappa > thresholds.small_max) {
    throw PreconditionError("long_range_factor: small-kappa series needs kappa <= " +
                            std::to_string(thresholds.small_max));
  }
  double b = 1.0;
  if (spec.n_terms >= 2) b -= 169.0 * kappa / 322.0;
  if (spec.n_terms >= 3) b += 2263.0 * kappa * kappa / 7728.0;
  return 23.0 / 60.0 * kappa * b;
}

double pairwise_integrated_factor(double kappa, int n_terms, double kappa_max) {
  if (n_terms < 1 || n_terms > 3) {
    throw UnsupportedOrderError("pairwise_integrated_factor: n_terms must be 1, 2 or 3");
  }
  if (std::isnan(kappa) || kappa < 0.0 || kappa > kappa_max) {
    throw PreconditionError("pairwise_integrated_factor: needs 0 <= kappa <= " +
                            std::to_string(kappa_max));
  }
  double b = 1.0;
  if (n_terms >= 2) b -= kappa / 3.0;
  if (n_terms >= 3) b += kappa * kappa / 9.0;
  return b;
}

std::array<Rational, 3> nonadditivity_coefficients() {
  return {{{-185, 966}, {303113, 3732624}, {-1325388223LL, 39662862624LL}}};
}

double nonadditivity_ratio(double kappa, int n_terms, double kappa_max) {
  if (n_terms < 1 || n_terms > 3) {
    throw UnsupportedOrderError("nonadditivity_ratio: n_terms must be 1, 2 or 3");
  }
  if (std::isnan(kappa) || kappa < 0.0 || kappa > kappa_max) {
    throw PreconditionError("nonadditivity_ratio: needs 0 <= kappa <= " +
                            std::to_string(kappa_max));
  }
  const auto c = nonadditivity_coefficients();
  double v = 0.0;
  double kp = kappa;
  for (int n = 0; n < n_terms; ++n) {
    v += c[n].value() * kp;
    kp *= kappa;
  }
  return v;
}

double short_range_bracket_numeric(double eps) {
  check_eps(eps, "short_range_bracket_numeric");
  if (eps == 1.0) return 0.0;
  if (std::isinf(eps)) return 1.0;
  const AngularJet f1 = angular_weight_jet(1.0, eps);
  const QuadratureResult r = integrate_beyond_one(
      [&](double p) { return angular_weight_jet(p, eps).d3; }, 1e-14);
  // f''(1) - FP int_0^1 f''' = f''(1) + int_1^inf f'''
  return (f1.d2 + r.value) / -4.0;
}

double long_range_bracket_numeric(double eps) {
  check_eps(eps, "long_range_bracket_numeric");
  if (eps == 1.0) return 0.0;
  if (std::isinf(eps)) return 1.0;
  const AngularJet f1 = angular_weight_jet(1.0, eps);
  const QuadratureResult r = integrate_beyond_one(
      [&](double p) { return angular_weight_jet(p, eps).d3 / p; }, 1e-14);
  return -(2.0 * f1.f + f1.d1 + f1.d2 + r.value) / 12.0;
}

double short_range_series_bracket(double kappa, const SeriesSpec& spec,
                                  const KappaThresholds& thresholds) {
  using C = std::complex<double>;
  if (std::isnan(kappa) || kappa < 0.0) {
    throw DomainError("short_range_series_bracket: kappa < 0");
  }
  if (spec.n_terms != 1) {
    // Small kappa: the second term is |t|^-7 singular. Large kappa: the
    // second term is non-uniform near t ~ kappa^-1/2 and its termwise finite
    // part moves the bracket by 3/kappa away from the exact value.
    throw UnsupportedOrderError("short_range_series_bracket: only the leading term is supported");
  }
  int order = 0;
  ComplexIntegrand g;
  if (spec.regime == KappaRegime::small) {
    if (kappa > thresholds.small_max) {
      throw PreconditionError("short_range_series_bracket: small-kappa series needs kappa <= " +
                              std::to_string(thresholds.small_max));
    }
    order = 5;
    g = [kappa](C t) { return 12.0 * kappa / std::pow(t, 5); };
  } else {
    if (kappa < thresholds.large_min || std::isinf(kappa)) {
      throw PreconditionError(
          "short_range_series_bracket: large-kappa series needs finite kappa >= " +
          std::to_string(thresholds.large_min));
    }
    const double rk = std::sqrt(kappa);
    order = 4;
    g = [rk](C t) { return 12.0 / (std::pow(t, 4) * rk); };
  }
  // On (0, 1] the continuation of |t| is the shifted t itself.
  const FinitePartResult fp =
      finite_part_integrate(g, FinitePartInterval::doubled_half, order,
                            DeltaSchedule::for_order(order));
  const AngularJet f1 = angular_weight_jet(1.0, 1.0 + kappa);
  return (f1.d2 - 0.5 * fp.value) / -4.0;
}

double physical_prefactor(const AtomParams& atom, double z, UnitSystem units) {
  atom.validate();
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("physical_prefactor: z must be > 0");
  const PhysicalConstants pc = constants(units);
  return pc.hbar * pc.c * atom.alpha0 * atom.k0 / (z * z * z);
}

double to_physical(const PotentialResult& result, const AtomParams& atom, double z,
                   UnitSystem units) {
  return physical_prefactor(atom, z, units) * result.v_reduced;
}

}  // namespace cpwall
