// Copyright 2026 The cpwall Authors
// SPDX-License-Identifier: Apache-2.0

// Reference computations that share no code path with the production
// evaluators. Slow and meant for tests and the validation suite.

#pragma once

#include <array>
#include <vector>

#include "cpwall/potential.hpp"
#include "cpwall/quadrature.hpp"

namespace cpwall::oracles {

struct CiSi {
  double ci;
  double si;
};

// Ci and si = Si - pi/2 from the power series summed in quad precision
// (x <= 40) or the optimally truncated asymptotic series (x > 40).
CiSi ci_si_reference(double x);

// Reduced potential from the imaginary-frequency form
//   v = (x0 / 16 pi) int_0^inf dx x^3 / (x0^2 + x^2) int_1^inf dp exp(-p x) f(p, eps),
// which needs no finite part and no auxiliary functions.
double lifshitz_reduced(double x0, double eps, double tol = 1e-11);

// Long-range factor g(kappa) as the x0 -> inf limit of the form above:
//   g = -(1/2) int_1^inf f(p, eps) / p^4 dp.
double lifshitz_long_range_factor(double eps);

// One term c * t^-power (or c * |t|^-power) of a Laurent expansion at t = 0.
struct LaurentTerm {
  int power;
  double coefficient;
  bool absolute;
};

// Finite part of int (sum of terms + remainder) over the interval, with the
// pure powers done analytically and the remainder (bounded at 0) by
// quadrature.
double analytic_finite_part(const std::vector<LaurentTerm>& terms, const RealIntegrand& remainder,
                            FinitePartInterval interval);

// int d^3r / |r - r_atom|^6 over the half-space below the plane, atom at
// height z, by two-dimensional quadrature. Exact value pi / (6 z^3).
double half_space_inverse_sixth(double z);

// d v / d eps at eps = 1 from summing -3 hbar w0 alpha0^2 / 4 r^6 over a
// dilute half-space with the Clausius-Mosotti density.
double london_pairwise_slope();

// Coefficients of kappa, kappa^2, kappa^3 in 1 - V_int / V built from the
// exact rational series of both brackets.
std::array<Rational, 3> nonadditivity_exact();

}  // namespace cpwall::oracles
