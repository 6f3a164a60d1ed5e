// Copyright 2026 The cpwall Authors
// SPDX-License-Identifier: Apache-2.0

// Sine and cosine integrals and the auxiliary pair
//   F(x) = Ci(x) sin x - si(x) cos x,   G(x) = F'(x) = Ci(x) cos x + si(x) sin x.
// F is the usual auxiliary function int_0^inf exp(-x t) / (1 + t^2) dt and
// G = -g(x) with g the companion auxiliary function.

#pragma once

namespace cpwall::sf {

inline constexpr double kEulerGamma = 0.57721566490153286060651209;
inline constexpr double kPi = 3.14159265358979323846264338;

// Below this argument Ci and si are summed from their power series,
// above it they come from the continued fraction for exp(ix) E1(ix).
inline constexpr double kSeriesLimit = 4.0;
// F and G switch from recomposition of Ci/si to the continued fraction
// at this argument.
inline constexpr double kAuxSwitch = 30.0;
// Derivatives of order >= 2 switch from the recurrence to the termwise
// differentiated asymptotic series here.
inline constexpr double kDerivativeSwitch = 40.0;
inline constexpr int kMaxDerivativeOrder = 6;

double cosine_integral(double x);
double shifted_sine_integral(double x);

double aux_F(double x);
double aux_G(double x);

// n-th derivative of F, n in 0..6.
double aux_F_derivative(int n, double x);

enum class SeriesRegime { small, large };

struct AsymptoticThresholds {
  double small_max = 0.1;
  double large_min = 10.0;
};

// Truncated small-x expansion pi/2 - (1 - gamma) x + x ln x (at most three
// terms, in that order) or the first n_terms of the alternating factorial
// series 1/x - 2/x^3 + 24/x^5 - ...
double aux_F_asymptotic(double x, SeriesRegime regime, int n_terms,
                        const AsymptoticThresholds& thresholds = {});

namespace detail {

struct AuxPair {
  double F;
  double G;
};

// Recomposition from Ci and si, valid for every x > 0.
AuxPair aux_recomposed(double x);
// Continued-fraction branch; accurate for x >= 2.
AuxPair aux_continued_fraction(double x);
// F^(n) from the optimally truncated asymptotic series.
double aux_F_derivative_asymptotic(int n, double x);

}  // namespace detail

}  // namespace cpwall::sf
