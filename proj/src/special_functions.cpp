// Copyright 2026 The cpwall Authors
// SPDX-License-Identifier: Apache-2.0

#include "cpwall/special_functions.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "cpwall/errors.hpp"

namespace cpwall::sf {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_positive(double x, const char* op) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(op) + ": argument must be finite and > 0, got " +
                      std::to_string(x));
  }
}

// Si(x) and Cin(x) = int_0^x (1 - cos t)/t dt by their Maclaurin series.
struct SeriesPair {
  double Si;
  double Cin;
};

SeriesPair small_series(double x) {
  const double x2 = x * x;
  double si_sum = 0.0;
  double cin_sum = 0.0;
  // s = (-1)^k x^(2k+1)/(2k+1)!, c = (-1)^(k+1) x^(2k)/(2k)! for k >= 1
  double s = x;
  double c = x2 / 2.0;
  for (int k = 0; k < 60; ++k) {
    const double si_term = s / (2 * k + 1);
    const double cin_term = c / (2 * k + 2);
    si_sum += si_term;
    cin_sum += cin_term;
    if (std::abs(si_term) < kEps * std::abs(si_sum) * 0.25 &&
        std::abs(cin_term) < kEps * std::abs(cin_sum) * 0.25) {
      break;
    }
    s *= -x2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
    c *= -x2 / ((2.0 * k + 3.0) * (2.0 * k + 4.0));
  }
  return {si_sum, cin_sum};
}

// exp(ix) E1(ix) = -G(x) - i F(x), modified Lentz evaluation.
std::complex<double> expint_cf(double x) {
  using C = std::complex<double>;
  constexpr double tiny = 1e-300;
  C b(1.0, x);
  C c(1.0 / tiny, 0.0);
  C d = 1.0 / b;
  C h = d;
  for (int i = 2; i < 100000; ++i) {
    const double a = -static_cast<double>(i - 1) * static_cast<double>(i - 1);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const C del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < 2.0 * kEps) return h;
  }
  throw Error("continued fraction for exp(ix)E1(ix) failed to converge");
}

}  // namespace

double cosine_integral(double x) {
  require_positive(x, "cosine_integral");
  if (x <= kSeriesLimit) {
    return kEulerGamma + std::log(x) - small_series(x).Cin;
  }
  const std::complex<double> e1 = std::polar(1.0, -x) * expint_cf(x);
  return -e1.real();
}

double shifted_sine_integral(double x) {
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError("shifted_sine_integral: argument must be finite and >= 0");
  }
  if (x == 0.0) return -kPi / 2.0;
  if (x <= kSeriesLimit) return small_series(x).Si - kPi / 2.0;
  const std::complex<double> e1 = std::polar(1.0, -x) * expint_cf(x);
  return e1.imag();
}

namespace detail {

AuxPair aux_recomposed(double x) {
  const double ci = cosine_integral(x);
  const double si = shifted_sine_integral(x);
  const double s = std::sin(x);
  const double c = std::cos(x);
  return {ci * s - si * c, ci * c + si * s};
}

AuxPair aux_continued_fraction(double x) {
  require_positive(x, "aux_continued_fraction");
  const std::complex<double> h = expint_cf(x);
  return {-h.imag(), -h.real()};
}

double aux_F_derivative_asymptotic(int n, double x) {
  // term_k = (-1)^(k+n) (2k+n)! / x^(2k+n+1)
  double term = (n % 2 == 0 ? 1.0 : -1.0) / x;
  for (int j = 1; j <= n; ++j) term *= j / x;
  double sum = term;
  for (int k = 0; k < 200; ++k) {
    const double next =
        -term * (2.0 * k + n + 1.0) * (2.0 * k + n + 2.0) / (x * x);
    if (std::abs(next) >= std::abs(term)) break;
    sum += next;
    term = next;
    if (std::abs(term) < 0.1 * kEps * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace detail

double aux_F(double x) {
  require_positive(x, "aux_F");
  return x < kAuxSwitch ? detail::aux_recomposed(x).F
                        : detail::aux_continued_fraction(x).F;
}

double aux_G(double x) {
  require_positive(x, "aux_G");
  return x < kAuxSwitch ? detail::aux_recomposed(x).G
                        : detail::aux_continued_fraction(x).G;
}

double aux_F_derivative(int n, double x) {
  if (n < 0) throw DomainError("aux_F_derivative: order must be >= 0");
  if (n > kMaxDerivativeOrder) {
    throw UnsupportedOrderError("aux_F_derivative: order " + std::to_string(n) +
                                " exceeds 6");
  }
  require_positive(x, "aux_F_derivative");
  if (n == 0) return aux_F(x);
  if (n == 1) return aux_G(x);
  if (x >= kDerivativeSwitch) return detail::aux_F_derivative_asymptotic(n, x);

  const int m = n / 2;
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  // sum_{j<m} (-1)^j (2j)!/x^(2j+1) or (-1)^j (2j+1)!/x^(2j+2)
  double poly = 0.0;
  double fact = 1.0;  // (2j)! or (2j+1)!
  double xp = (n % 2 == 0) ? x : x * x;
  for (int j = 0; j < m; ++j) {
    poly += ((j % 2 == 0) ? 1.0 : -1.0) * fact / xp;
    const int base = (n % 2 == 0) ? 2 * j : 2 * j + 1;
    fact *= static_cast<double>(base + 1) * static_cast<double>(base + 2);
    xp *= x * x;
  }
  if (n % 2 == 0) return sign * (aux_F(x) - poly);
  return sign * (aux_G(x) + poly);
}

double aux_F_asymptotic(double x, SeriesRegime regime, int n_terms,
                        const AsymptoticThresholds& thresholds) {
  if (n_terms < 1) throw DomainError("aux_F_asymptotic: n_terms must be >= 1");
  if (regime == SeriesRegime::small) {
    if (!(x >= 0.0) || x > thresholds.small_max) {
      throw PreconditionError("aux_F_asymptotic: small-x series needs 0 <= x <= " +
                              std::to_string(thresholds.small_max));
    }
    if (n_terms > 3) {
      throw UnsupportedOrderError("aux_F_asymptotic: small-x series has 3 terms");
    }
    double v = kPi / 2.0;
    if (n_terms >= 2) v -= (1.0 - kEulerGamma) * x;
    if (n_terms >= 3 && x > 0.0) v += x * std::log(x);
    return v;
  }
  if (!std::isfinite(x) || x < thresholds.large_min) {
    throw PreconditionError("aux_F_asymptotic: large-x series needs x >= " +
                            std::to_string(thresholds.large_min));
  }
  double term = 1.0 / x;
  double v = 0.0;
  for (int k = 0; k < n_terms; ++k) {
    v += term;
    term *= -(2.0 * k + 1.0) * (2.0 * k + 2.0) / (x * x);
  }
  return v;
}

}  // namespace cpwall::sf
