// Copyright 2026 The cpwall Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace cpwall {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

using RealIntegrand = std::function<double(double)>;
using ComplexIntegrand = std::function<std::complex<double>(std::complex<double>)>;

struct AdaptiveOptions {
  // Interior points where the integrand has kinks or steep features.
  std::vector<double> breakpoints;
  // Accept when error <= max(tol, rel_tol * |value|).
  double rel_tol = 0.0;
  std::size_t max_evaluations = 2'000'000;
};

// Globally adaptive 21-point Gauss-Kronrod quadrature on [a, b].
// Throws BudgetExceededError carrying the best estimate.
QuadratureResult adaptive_integrate(const RealIntegrand& g, double a, double b,
                                    double tol, const AdaptiveOptions& options = {});

struct DeltaSchedule {
  std::vector<double> deltas;  // decreasing, constant ratio
  int extrapolation_order = 3;  // number of vanishing correction terms fitted

  static DeltaSchedule geometric(double first, double ratio, int count, int order);
  // 1e-2 * 2^-n for n = 0..6, order 3.
  static DeltaSchedule standard();
  // A schedule suited to integrands diverging like |t|^-order.
  static DeltaSchedule for_order(int singularity_order);

  void validate() const;
};

enum class FinitePartInterval {
  symmetric,     // [-1, 1]
  doubled_half,  // 2 * [0, 1]
};

enum class ShiftSide { upper, lower };

struct FinitePartOptions {
  ShiftSide side = ShiftSide::upper;
  // The integrand carries logarithms (e.g. ln|t|, F(x0 t)) in its regular
  // part; odd powers and delta^2m ln(delta) enter the fit.
  bool log_terms = false;
  // Acceptable fit residual, absolute.
  double residual_tol = 1e-7;
  // Relative accuracy requested from each shifted quadrature.
  double quadrature_rel_tol = 1e-13;
};

struct FinitePartResult : QuadratureResult {
  double residual = 0.0;  // max misfit of the delta extrapolation
};

// Hadamard finite part by the shift t -> t +- i delta, Re of the shifted
// integral extrapolated to delta -> 0. The integrand must be real on the
// real axis. Write |t| as abs_continued(tau) when g depends on |t|.
FinitePartResult finite_part_integrate(const ComplexIntegrand& g,
                                       FinitePartInterval interval,
                                       int singularity_order,
                                       const DeltaSchedule& schedule,
                                       const FinitePartOptions& options = {});

// |t| continued off the axis as sqrt(tau^2) on the principal branch.
inline std::complex<double> abs_continued(std::complex<double> tau) {
  return std::sqrt(tau * tau);
}

struct OscillatoryOptions {
  double wavelength = 6.283185307179586;  // asymptotic period of g
  std::size_t max_lobes = 600;
  double rel_tol = 0.0;
};

// int_0^inf g: adaptive on [0, k_break], then half-period lobes summed
// with Wynn's epsilon algorithm. Throws AccelerationError when the lobe
// series neither alternates nor converges directly.
QuadratureResult semiinfinite_oscillatory_integrate(const RealIntegrand& g,
                                                    double k_break, double tol,
                                                    const OscillatoryOptions& options = {});

}  // namespace cpwall
