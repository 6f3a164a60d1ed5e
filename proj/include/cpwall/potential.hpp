// Copyright 2026 The cpwall Authors
// SPDX-License-Identifier: Apache-2.0

// Atom-wall potential in reduced form V(z) = (hbar c alpha0 k0 / z^3) v(x0),
// x0 = 2 k0 z, for a ground-state two-level atom facing a dielectric
// half-space.

#pragma once

#include <array>

#include "cpwall/dielectric.hpp"

namespace cpwall {

struct AtomParams {
  double k0 = 1.0;      // transition wavenumber omega0 / c
  double alpha0 = 1.0;  // static polarizability (volume)

  void validate() const;
};

struct ReducedPoint {
  double x0;
  double z;

  static ReducedPoint at(const AtomParams& atom, double z);
};

enum class Regime { general, short_asymptotic, long_asymptotic, perfect_conductor };

const char* to_string(Regime regime);

struct PotentialResult {
  double v_reduced = 0.0;
  double error_estimate = 0.0;
  Regime regime = Regime::general;
};

struct SeriesSpec {
  KappaRegime regime = KappaRegime::small;
  int n_terms = 3;
};

struct RegimeThresholds {
  KappaThresholds kappa;
  double short_x0_max = 0.1;
  double long_x0_min = 10.0;
};

enum class UnitSystem { si, atomic };

// hbar and c in the requested system: SI (J s, m/s) or atomic units.
struct PhysicalConstants {
  double hbar;
  double c;
};
PhysicalConstants constants(UnitSystem units);

// Ground-state dynamic polarizability; omega is an angular frequency in
// the given unit system.
double two_level_susceptibility(double omega, const AtomParams& atom,
                                UnitSystem units = UnitSystem::si);

PotentialResult perfect_conductor_reduced(double x0);

// Constant permittivity; eps may be +infinity.
PotentialResult reduced_potential_nondispersive(double x0, double eps, double tol);

// Wavenumber-dependent permittivity. The model needs a finite limit
// eps_inf at large k with (eps(k) - eps_inf) k^2 bounded.
PotentialResult reduced_potential_dispersive(double x0, const DielectricModel& model,
                                             const AtomParams& atom, double tol);

// Short- or long-distance asymptote for x0 within the thresholds.
PotentialResult asymptotic_potential(double x0, double eps,
                                     const RegimeThresholds& thresholds = {});

double short_range_reduced(double eps);

// g with V ~ g * (-3 hbar c alpha0 / 8 pi z^4) at large z, from the kappa series.
double long_range_factor(double kappa, const SeriesSpec& spec,
                         const KappaThresholds& thresholds = {});

double pairwise_integrated_factor(double kappa, int n_terms, double kappa_max = 0.5);

struct Rational {
  long long num;
  long long den;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Coefficients of kappa, kappa^2, kappa^3 in (V - V_int) / V.
std::array<Rational, 3> nonadditivity_coefficients();

double nonadditivity_ratio(double kappa, int n_terms, double kappa_max = 0.2);

// Short-range factor (eps-1)/(eps+1) rebuilt from the regularized bracket
// f''(1) - FP int_0^1 f''' by quadrature, normalized so g(inf) = 1.
double short_range_bracket_numeric(double eps);

// Long-range factor g(kappa) rebuilt the same way from
// 2 f(1) + f'(1) + f''(1) - FP int_0^1 f'''/t, normalized so g(inf) = 1.
double long_range_bracket_numeric(double eps);

// Short-range factor from the leading kappa-series term of f''' with its
// finite part taken by the t -> t + i delta shift. Only n_terms = 1.
double short_range_series_bracket(double kappa, const SeriesSpec& spec,
                                  const KappaThresholds& thresholds = {});

// hbar c alpha0 k0 / z^3 with lengths in metres (SI) or bohr (atomic).
double physical_prefactor(const AtomParams& atom, double z, UnitSystem units);

double to_physical(const PotentialResult& result, const AtomParams& atom, double z,
                   UnitSystem units);

}  // namespace cpwall
