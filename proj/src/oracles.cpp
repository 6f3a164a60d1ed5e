// Copyright 2026 The cpwall Authors
// SPDX-License-Identifier: Apache-2.0

#include "cpwall/oracles.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <map>
#include <stdexcept>

namespace cpwall::oracles {
namespace {

namespace bm = boost::multiprecision;
namespace bq = boost::math::quadrature;
using Big = bm::cpp_bin_float_50;
using Q = bm::cpp_rational;

Q frac(long long a, long long b) { return Q(a) / Q(b); }

constexpr double kPi = boost::math::constants::pi<double>();

template <class F>
double gk(F f, double a, double b, double tol) {
  return bq::gauss_kronrod<double, 31>::integrate(f, a, b, 20, tol);
}

// Reflection weight for p >= 1 written without cancellation at small kappa.
double weight(double p, double eps) {
  if (std::isinf(eps)) return -2.0 * p * p;
  const double kappa = eps - 1.0;
  const double s = std::sqrt(kappa + p * p);
  const double te = -kappa / ((p + s) * (p + s));
  const double tm = kappa * ((eps + 1.0) * p * p - 1.0) / ((eps * p + s) * (eps * p + s));
  return te + (1.0 - 2.0 * p * p) * tm;
}

// int_1^inf exp(-p x) f(p) dp / exp(-x)
double laplace_tail(double x, double eps) {
  bq::exp_sinh<double> es;
  const double r = es.integrate([&](double w) { return std::exp(-w) * weight(1.0 + w / x, eps); },
                                0.0, std::numeric_limits<double>::infinity(), 1e-13);
  return r / x;
}

// Laurent polynomial in p with rational coefficients.
using Poly = std::map<int, Q>;
using Series = std::vector<Poly>;  // coefficients of kappa^n

Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) r[i + j] += x * y;
  }
  return r;
}

Poly add(Poly a, const Poly& b, const Q& scale = 1) {
  for (const auto& [j, y] : b) a[j] += scale * y;
  return a;
}

Series smul(const Series& a, const Series& b) {
  Series r(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    for (std::size_t k = 0; k <= n; ++k) r[n] = add(r[n], mul(a[k], b[n - k]));
  }
  return r;
}

// a / b where b[0] is a single monomial.
Series sdiv(const Series& a, const Series& b) {
  if (b[0].size() != 1) throw std::logic_error("sdiv: leading term must be a monomial");
  const int m = b[0].begin()->first;
  const Q c = b[0].begin()->second;
  const Poly inv0 = {{-m, 1 / c}};
  Series inv(b.size());
  inv[0] = inv0;
  for (std::size_t n = 1; n < b.size(); ++n) {
    Poly acc;
    for (std::size_t k = 1; k <= n; ++k) acc = add(acc, mul(b[k], inv[n - k]));
    inv[n] = mul(acc, {{-m, -1 / c}});
  }
  return smul(a, inv);
}

// Small-kappa coefficients g_n of g(kappa) = -(1/2) int_1^inf f / p^4.
std::vector<Q> long_range_series(int order) {
  const int n = order + 1;
  Series s(n), p(n), ep(n), one(n), w(n);
  // s = p sqrt(1 + kappa / p^2) = sum binom(1/2, j) kappa^j p^(1 - 2j)
  Q binom = 1;
  for (int j = 0; j < n; ++j) {
    s[j] = {{1 - 2 * j, binom}};
    binom = binom * (frac(1, 2) - j) / (j + 1);
  }
  p[0] = {{1, 1}};
  ep[0] = {{1, 1}};
  ep[1] = {{1, 1}};
  one[0] = {{0, 1}};
  w[0] = {{0, 1}, {2, -2}};  // 1 - 2 p^2
  auto lin = [&](const Series& a, const Series& b, int sign) {
    Series r(n);
    for (int k = 0; k < n; ++k) r[k] = add(a[k], b[k], sign);
    return r;
  };
  const Series te = sdiv(lin(p, s, -1), lin(p, s, 1));
  const Series tm = sdiv(lin(ep, s, -1), lin(ep, s, 1));
  const Series f = lin(te, smul(w, tm), 1);
  std::vector<Q> g(n);
  for (int k = 0; k < n; ++k) {
    for (const auto& [e, c] : f[k]) {
      if (c == 0) continue;
      const int m = e - 4;
      if (m >= -1) throw std::logic_error("long_range_series: divergent term");
      g[k] += frac(-1, 2) * c * frac(-1, m + 1);
    }
  }
  return g;
}

Rational to_rational(const Q& q) {
  return {static_cast<long long>(bm::numerator(q)), static_cast<long long>(bm::denominator(q))};
}

}  // namespace

CiSi ci_si_reference(double x) {
  if (!(x > 0.0)) throw std::domain_error("ci_si_reference: x must be > 0");
  const Big X = x;
  const Big pi = boost::math::constants::pi<Big>();
  if (x <= 40.0) {
    Big si = 0, cin = 0;
    Big term = X;  // x^(2k+1) / (2k+1)!
    for (int k = 0; k < 200; ++k) {
      const Big a = term / (2 * k + 1);
      si += (k % 2 == 0) ? a : Big(-a);
      const Big t2 = term * X / (2 * k + 2);  // x^(2k+2) / (2k+2)!
      const Big b = t2 / (2 * k + 2);
      cin += (k % 2 == 0) ? b : Big(-b);
      term = t2 * X / (2 * k + 3);
      if (a < 1e-45 && k > 10) break;
    }
    const Big ci = boost::math::constants::euler<Big>() + log(X) - cin;
    return {static_cast<double>(ci), static_cast<double>(si - pi / 2)};
  }
  // f ~ sum (-1)^k (2k)! / x^(2k+1), g ~ sum (-1)^k (2k+1)! / x^(2k+2)
  Big f = 0, g = 0;
  Big tf = 1 / X, tg = 1 / (X * X);
  for (int k = 0; k < 200; ++k) {
    f += tf;
    g += tg;
    const Big nf = -tf * (2 * k + 1) * (2 * k + 2) / (X * X);
    const Big ng = -tg * (2 * k + 2) * (2 * k + 3) / (X * X);
    if (abs(nf) > abs(tf)) break;
    tf = nf;
    tg = ng;
  }
  const Big c = cos(X), s = sin(X);
  return {static_cast<double>(f * s - g * c), static_cast<double>(-f * c - g * s)};
}

double lifshitz_reduced(double x0, double eps, double tol) {
  if (!(x0 > 0.0)) throw std::domain_error("lifshitz_reduced: x0 must be > 0");
  if (eps == 1.0) return 0.0;
  // x = exp(s); the integrand vanishes like x at 0 and like exp(-x) at inf.
  auto h = [&](double s) {
    const double x = std::exp(s);
    return x * x * x * x / (x0 * x0 + x * x) * std::exp(-x) * laplace_tail(x, eps);
  };
  const double lo = std::log(std::min(x0, 1.0)) - 40.0;
  const double mid = std::log(x0);
  const double hi = std::log(800.0);
  double total = 0.0;
  if (mid > lo && mid < hi) {
    total = gk(h, lo, mid, tol) + gk(h, mid, hi, tol);
  } else {
    total = gk(h, lo, hi, tol);
  }
  return x0 / (16.0 * kPi) * total;
}

double lifshitz_long_range_factor(double eps) {
  if (eps == 1.0) return 0.0;
  bq::exp_sinh<double> es;
  const double r =
      es.integrate([&](double q) { return weight(1.0 + q, eps) / std::pow(1.0 + q, 4); }, 0.0,
                   std::numeric_limits<double>::infinity(), 1e-14);
  return -0.5 * r;
}

double analytic_finite_part(const std::vector<LaurentTerm>& terms, const RealIntegrand& remainder,
                            FinitePartInterval interval) {
  double total = 0.0;
  for (const LaurentTerm& t : terms) {
    if (t.power < 1) throw std::domain_error("analytic_finite_part: power must be >= 1");
    // FP int_0^1 t^-n = 1/(1-n) (0 for n = 1)
    const double half = t.power == 1 ? 0.0 : 1.0 / (1.0 - t.power);
    double v = 0.0;
    if (interval == FinitePartInterval::doubled_half || t.absolute) {
      v = 2.0 * half;
    } else {
      v = (t.power % 2 == 0) ? 2.0 * half : 0.0;
    }
    total += t.coefficient * v;
  }
  if (interval == FinitePartInterval::doubled_half) {
    total += 2.0 * gk(remainder, 0.0, 1.0, 1e-15);
  } else {
    total += gk(remainder, -1.0, 0.0, 1e-15) + gk(remainder, 0.0, 1.0, 1e-15);
  }
  return total;
}

double half_space_inverse_sixth(double z) {
  if (!(z > 0.0)) throw std::domain_error("half_space_inverse_sixth: z must be > 0");
  // Depth h below the atom, h >= z, through h = z / w; cylinder radius
  // rho = h u / (1 - u).
  auto disc = [](double h) {
    return gk(
        [h](double u) {
          if (u >= 1.0) return 0.0;
          const double rho = h * u / (1.0 - u);
          const double jac = h / ((1.0 - u) * (1.0 - u));
          const double r2 = rho * rho + h * h;
          return 2.0 * kPi * rho * jac / (r2 * r2 * r2);
        },
        0.0, 1.0, 1e-14);
  };
  return gk(
      [&](double w) {
        if (w <= 0.0) return 0.0;
        const double h = z / w;
        return disc(h) * z / (w * w);
      },
      0.0, 1.0, 1e-14);
}

double london_pairwise_slope() {
  // Clausius-Mosotti: N alpha0 = (3 / 4 pi) (eps - 1) / (eps + 2), whose eps
  // derivative at eps = 1 is (3 / 4 pi) * 3 / (eps + 2)^2.
  const double dn_alpha = 3.0 / (4.0 * kPi) * 3.0 / 9.0;
  const double z = 1.0;
  // V = -(3/4) hbar w0 alpha0 (N alpha0) I(z); with hbar w0 = hbar c k0 the
  // reduced v = V z^3 / (hbar c alpha0 k0).
  return -0.75 * dn_alpha * half_space_inverse_sixth(z) * z * z * z;
}

std::array<Rational, 3> nonadditivity_exact() {
  const std::vector<Q> g = long_range_series(4);
  // g_0 = 0; the bracket B is g / (g_1 kappa).
  std::vector<Q> b(4);
  for (int n = 0; n < 4; ++n) b[n] = g[n + 1] / g[1];
  // Pairwise bracket 1 - k/3 + k^2/9 - ... taken as the geometric series.
  std::vector<Q> pw = {1, frac(-1, 3), frac(1, 9), frac(-1, 27)};
  // q = pw / b as a power series; the ratio is 1 - q.
  std::vector<Q> q(4);
  for (int n = 0; n < 4; ++n) {
    Q acc = pw[n];
    for (int k = 1; k <= n; ++k) acc -= b[k] * q[n - k];
    q[n] = acc / b[0];
  }
  return {to_rational(-q[1]), to_rational(-q[2]), to_rational(-q[3])};
}

}  // namespace cpwall::oracles
