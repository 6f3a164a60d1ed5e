// Copyright 2026 The cpwall Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "cpwall/dielectric.hpp"
#include "cpwall/errors.hpp"

using namespace cpwall;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const std::vector<double> kEpsGrid = {1.0, 1.5, 2.0, 4.0, 10.0, 100.0};

std::vector<double> t_grid(double a, double b, int n) {
  std::vector<double> t(n);
  for (int i = 0; i < n; ++i) t[i] = a + (b - a) * i / (n - 1);
  return t;
}

// Central difference of order `order`, Richardson-extrapolated once.
double fd_derivative(int order, double t, double eps, double h) {
  auto f = [eps](double x) { return angular_weight(x, eps); };
  auto d = [&](double s) {
    switch (order) {
      case 1:
        return (f(t + s) - f(t - s)) / (2 * s);
      case 2:
        return (f(t + s) - 2 * f(t) + f(t - s)) / (s * s);
      default:
        return (f(t + 2 * s) - 2 * f(t + s) + 2 * f(t - s) - f(t - 2 * s)) / (2 * s * s * s);
    }
  };
  return (4.0 * d(h / 2) - d(h)) / 3.0;
}

}  // namespace

TEST_CASE("permittivity models") {
  const DielectricModel c = DielectricModel::constant(2.0);
  for (double k : {0.0, 1.0, 1e6}) CHECK(permittivity(c, k) == 2.0);
  CHECK(c.asymptotic_permittivity().value() == 2.0);

  const DielectricModel r = DielectricModel::single_relaxation(1.0, 3.0);
  CHECK(r.permittivity(0.0) == 2.0);
  CHECK(r.permittivity(3.0) == 1.5);
  CHECK(r.permittivity(1e12) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.asymptotic_permittivity().value() == 1.0);

  const double kc = 1.0;
  const DielectricModel t =
      DielectricModel::tabulated({{0.0, 3.0}, {2.0 * kc, 1.5}}, Interpolation::linear);
  CHECK(t.permittivity(kc) == doctest::Approx(2.25).epsilon(1e-15));
  CHECK_FALSE(t.asymptotic_permittivity().has_value());
  CHECK_THROWS_AS(t.permittivity(2.5 * kc), ValidityError);
  CHECK_THROWS_AS(t.permittivity(-1.0), DomainError);
}

TEST_CASE("model construction rejects invalid media") {
  CHECK_THROWS_AS(DielectricModel::constant(0.5), ValidityError);
  CHECK_THROWS_AS(DielectricModel::constant(NAN), ValidityError);
  CHECK_THROWS_AS(DielectricModel::single_relaxation(-0.1, 1.0), ValidityError);
  CHECK_THROWS_AS(DielectricModel::single_relaxation(1.0, 0.0), ValidityError);
  CHECK_THROWS_AS(DielectricModel::tabulated({{0.0, 2.0}}), ValidityError);
  CHECK_THROWS_AS(DielectricModel::tabulated({{0.0, 2.0}, {1.0, 0.9}}), ValidityError);
  CHECK_THROWS_AS(DielectricModel::tabulated({{1.0, 2.0}, {1.0, 3.0}}), ValidityError);
}

TEST_CASE("monotone cubic table stays within the samples") {
  const DielectricModel m = DielectricModel::tabulated(
      {{0.0, 4.0}, {1.0, 3.9}, {2.0, 1.2}, {3.0, 1.1}, {5.0, 1.0}}, Interpolation::monotone_cubic);
  double prev = 5.0;
  for (int i = 0; i <= 500; ++i) {
    const double k = 0.01 * i;
    const double e = m.permittivity(k);
    CHECK(e >= 1.0);
    CHECK(e <= prev + 1e-15);
    prev = e;
  }
  CHECK(m.permittivity(2.0) == doctest::Approx(1.2).epsilon(1e-15));
}

TEST_CASE("Fresnel coefficients") {
  CHECK(fresnel_te(0.3, 1.0) == 0.0);
  CHECK(fresnel_tm(0.3, 1.0) == 0.0);
  CHECK(fresnel_te(1.0, 4.0) == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
  CHECK(fresnel_tm(1.0, 4.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(fresnel_te(0.4, kInf) == -1.0);
  CHECK(fresnel_tm(0.4, kInf) == 1.0);
  CHECK(fresnel_te(0.4, 1e12) == doctest::Approx(-1.0).epsilon(1e-5));
  CHECK_THROWS_AS(fresnel_te(0.5, 0.9), ValidityError);
  CHECK_THROWS_AS(fresnel_tm(0.5, 0.9), ValidityError);
  for (double eps : kEpsGrid) {
    for (double t : t_grid(0.05, 1.0, 20)) {
      CHECK(fresnel_te(t, eps) <= 0.0);
      CHECK(fresnel_te(t, eps) >= -1.0);
      CHECK(std::abs(fresnel_tm(t, eps)) <= 1.0);
    }
  }
}

TEST_CASE("angular weight values and limits") {
  for (double t : {0.1, 0.5, 1.0}) CHECK(angular_weight(t, 1.0) == 0.0);
  CHECK(angular_weight(0.5, kInf) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(angular_weight(1.0, 4.0) == doctest::Approx(-2.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(angular_weight(0.0, 2.0), SingularPointError);
  CHECK(kAngularWeightAtZero == -2.0);
  CHECK(angular_weight(1e-9, 2.0) == doctest::Approx(kAngularWeightAtZero).epsilon(1e-6));
}

TEST_CASE("angular weight decomposition, evenness and bounds") {
  for (double eps : kEpsGrid) {
    for (int i = 1; i <= 10; ++i) {
      const double t = 0.1 * i;
      const double f = angular_weight(t, eps);
      CHECK(f == fresnel_te(t, eps) + (1.0 - 2.0 * t * t) * fresnel_tm(t, eps));
      CHECK(angular_weight(-t, eps) == f);
      CHECK(f <= 0.0);
      CHECK(f >= -2.0);
    }
  }
}

TEST_CASE("angular weight tends to -2 t^2 as eps grows") {
  // The leading correction is of order (2/t + 4t) / sqrt(eps): 0.02 at
  // t = 0.1 and eps = 1e6.
  for (double eps : {1e6, 1e12}) {
    for (int i = 1; i <= 10; ++i) {
      const double t = 0.1 * i;
      CHECK(std::abs(angular_weight(t, eps) + 2.0 * t * t) <= (2.0 / t + 4.0 * t) / std::sqrt(eps));
    }
  }
}

TEST_CASE("angular weight derivatives") {
  CHECK(angular_weight_derivative(1, 0.5, kInf) == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(angular_weight_derivative(3, 0.4, 1.0) == 0.0);
  CHECK(angular_weight_derivative(3, 0.5, 2.0) ==
        doctest::Approx(fd_derivative(3, 0.5, 2.0, 2e-3)).epsilon(1e-6));
  for (int order = 1; order <= 3; ++order) {
    for (double eps : {1.5, 2.0, 10.0}) {
      for (double t : t_grid(0.2, 0.9, 15)) {
        CAPTURE(order);
        CAPTURE(eps);
        CAPTURE(t);
        const double h = order == 3 ? 4e-3 : 1e-3;
        CHECK(angular_weight_derivative(order, t, eps) ==
              doctest::Approx(fd_derivative(order, t, eps, h)).epsilon(1e-6));
      }
    }
  }
  CHECK_THROWS_AS(angular_weight_derivative(1, 0.0, 2.0), SingularPointError);
  CHECK_THROWS_AS(angular_weight_derivative(4, 0.5, 2.0), UnsupportedOrderError);
  CHECK_THROWS_AS(angular_weight_derivative(1, 1.5, 2.0), DomainError);
}

TEST_CASE("jet continues past t = 1") {
  // For t > 1 the jet is the analytic continuation; check it against its
  // own finite differences and the conductor limit.
  const double t = 3.0;
  const AngularJet j = angular_weight_jet(t, kInf);
  CHECK(j.f == doctest::Approx(-18.0));
  CHECK(j.d1 == doctest::Approx(-12.0));
  CHECK(j.d2 == doctest::Approx(-4.0));
  CHECK(j.d3 == doctest::Approx(0.0));
  const double h = 1e-4;
  const AngularJet a = angular_weight_jet(t + h, 2.0), b = angular_weight_jet(t - h, 2.0);
  CHECK(angular_weight_jet(t, 2.0).d3 == doctest::Approx((a.d2 - b.d2) / (2 * h)).epsilon(1e-7));
}

TEST_CASE("f3 series values") {
  CHECK(f3_series(1.0, 0.01, KappaRegime::small, 3) == doctest::Approx(0.1176345).epsilon(1e-9));
  CHECK(f3_series(1.0, 1e4, KappaRegime::large, 3) == doctest::Approx(0.115302).epsilon(1e-9));
  CHECK(f3_series(0.7, 0.1, KappaRegime::small, 1) == doctest::Approx(12 * 0.1 / std::pow(0.7, 5)));
  CHECK_THROWS_AS(f3_series(0.5, 0.5, KappaRegime::small, 2), PreconditionError);
  CHECK_THROWS_AS(f3_series(0.5, 10.0, KappaRegime::large, 2), PreconditionError);
  CHECK_THROWS_AS(f3_series(0.5, 0.1, KappaRegime::small, 4), UnsupportedOrderError);
  CHECK_NOTHROW(f3_series(0.5, 10.0, KappaRegime::large, 2, {0.2, 10.0}));
}

TEST_CASE("f3 small-kappa series against the closed form") {
  // At t = 0.5, kappa = 0.05 the expansion parameter kappa / t^2 is 0.2 and
  // the second term is already half the first, so three terms leave 6%.
  const double exact = angular_weight_derivative(3, 0.5, 1.05);
  CHECK(std::abs(f3_series(0.5, 0.05, KappaRegime::small, 3) / exact - 1.0) <= 0.06);
  CHECK(std::abs(f3_series(0.5, 0.01, KappaRegime::small, 3) / exact - 1.0) > 0.0);
  const double exact1 = angular_weight_derivative(3, 0.5, 1.01);
  CHECK(std::abs(f3_series(0.5, 0.01, KappaRegime::small, 3) / exact1 - 1.0) <= 0.002);

  // Two terms: relative error <= C kappa^2 / t^4 with C = 10 (fitted max 9.45).
  for (double kappa : {0.1, 0.03, 0.01, 0.003, 0.001}) {
    for (int i = 0; i <= 14; ++i) {
      const double t = std::min(1.0, 0.3 + 0.05 * i);
      const double ex = angular_weight_derivative(3, t, 1.0 + kappa);
      const double r = std::abs(f3_series(t, kappa, KappaRegime::small, 2) / ex - 1.0);
      CAPTURE(kappa);
      CAPTURE(t);
      CHECK(r <= 10.0 * kappa * kappa / std::pow(t, 4));
    }
  }
}

TEST_CASE("f3 large-kappa series converges") {
  for (double t : {0.5, 1.0}) {
    auto err = [t](double kappa) {
      return std::abs(f3_series(t, kappa, KappaRegime::large, 3) /
                          angular_weight_derivative(3, t, 1.0 + kappa) -
                      1.0);
    };
    CHECK(err(1e4) < err(1e3) / 20.0);
    CHECK(err(1e4) < 2e-4);
  }
}
