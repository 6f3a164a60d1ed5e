// Copyright 2026 The cpwall Authors
// SPDX-License-Identifier: Apache-2.0

// Truncated Taylor polynomials in one variable. Arithmetic on Taylor<N>
// propagates exact derivatives up to order N through rational expressions
// and square roots; c[k] holds the k-th derivative divided by k!.

#pragma once

#include <array>
#include <cmath>

namespace cpwall::detail {

template <int N>
struct Taylor {
  std::array<double, N + 1> c{};

  static Taylor constant(double v) {
    Taylor r;
    r.c[0] = v;
    return r;
  }
  static Taylor variable(double v) {
    Taylor r;
    r.c[0] = v;
    if constexpr (N >= 1) r.c[1] = 1.0;
    return r;
  }

  // k-th derivative at the expansion point.
  double derivative(int k) const {
    double f = 1.0;
    for (int j = 2; j <= k; ++j) f *= j;
    return c[k] * f;
  }

  friend Taylor operator+(Taylor a, const Taylor& b) {
    for (int k = 0; k <= N; ++k) a.c[k] += b.c[k];
    return a;
  }
  friend Taylor operator-(Taylor a, const Taylor& b) {
    for (int k = 0; k <= N; ++k) a.c[k] -= b.c[k];
    return a;
  }
  friend Taylor operator-(Taylor a) {
    for (auto& v : a.c) v = -v;
    return a;
  }
  friend Taylor operator+(Taylor a, double s) {
    a.c[0] += s;
    return a;
  }
  friend Taylor operator+(double s, Taylor a) { return a + s; }
  friend Taylor operator-(Taylor a, double s) {
    a.c[0] -= s;
    return a;
  }
  friend Taylor operator-(double s, Taylor a) { return -a + s; }
  friend Taylor operator*(Taylor a, double s) {
    for (auto& v : a.c) v *= s;
    return a;
  }
  friend Taylor operator*(double s, Taylor a) { return a * s; }

  friend Taylor operator*(const Taylor& a, const Taylor& b) {
    Taylor r;
    for (int k = 0; k <= N; ++k) {
      double s = 0.0;
      for (int j = 0; j <= k; ++j) s += a.c[j] * b.c[k - j];
      r.c[k] = s;
    }
    return r;
  }

  friend Taylor operator/(const Taylor& a, const Taylor& b) {
    Taylor q;
    for (int k = 0; k <= N; ++k) {
      double s = a.c[k];
      for (int j = 1; j <= k; ++j) s -= b.c[j] * q.c[k - j];
      q.c[k] = s / b.c[0];
    }
    return q;
  }
  friend Taylor operator/(double s, const Taylor& b) {
    return constant(s) / b;
  }
};

template <int N>
Taylor<N> sqrt(const Taylor<N>& a) {
  Taylor<N> y;
  y.c[0] = std::sqrt(a.c[0]);
  for (int k = 1; k <= N; ++k) {
    double s = a.c[k];
    for (int j = 1; j < k; ++j) s -= y.c[j] * y.c[k - j];
    y.c[k] = s / (2.0 * y.c[0]);
  }
  return y;
}

}  // namespace cpwall::detail
