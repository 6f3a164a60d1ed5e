// Copyright 2026 The cpwall Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <limits>

#include "cpwall/errors.hpp"
#include "cpwall/oracles.hpp"
#include "cpwall/potential.hpp"
#include "cpwall/special_functions.hpp"

using namespace cpwall;

namespace {
constexpr double kPi = sf::kPi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTol = 1e-11;

double v(double x0, double eps) { return reduced_potential_nondispersive(x0, eps, kTol).v_reduced; }
double v0(double x0) { return perfect_conductor_reduced(x0).v_reduced; }
}  // namespace

TEST_CASE("two-level susceptibility") {
  const AtomParams atom{2.0, 3.0};
  const double w0 = atom.k0 * constants(UnitSystem::atomic).c;
  CHECK(two_level_susceptibility(0.0, atom, UnitSystem::atomic) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(two_level_susceptibility(kInf, atom, UnitSystem::atomic) == 0.0);
  CHECK(std::abs(two_level_susceptibility(1e12 * w0, atom, UnitSystem::atomic)) < 1e-20);
  const double w = 0.3 * w0;
  CHECK(two_level_susceptibility(-w, atom, UnitSystem::atomic) ==
        doctest::Approx(two_level_susceptibility(w, atom, UnitSystem::atomic)).epsilon(1e-15));
  CHECK_THROWS_AS(two_level_susceptibility(w0, atom, UnitSystem::atomic), PoleError);
  CHECK_THROWS_AS(two_level_susceptibility(-w0, atom, UnitSystem::atomic), PoleError);
  CHECK_THROWS_AS(two_level_susceptibility(0.0, AtomParams{0.0, 1.0}), DomainError);
}

TEST_CASE("reduced point") {
  const AtomParams atom{3.0, 1.0};
  const ReducedPoint p = ReducedPoint::at(atom, 0.25);
  CHECK(p.x0 == 2.0 * 3.0 * 0.25);
  CHECK_THROWS_AS(ReducedPoint::at(atom, 0.0), DomainError);
  CHECK_THROWS_AS(ReducedPoint::at(AtomParams{1.0, -1.0}, 1.0), DomainError);
}

TEST_CASE("perfect conductor closed form") {
  CHECK(v0(1e-8) == doctest::Approx(-0.125).epsilon(1e-6));
  CHECK(v0(1e3) * 1e3 == doctest::Approx(-3.0 / (4.0 * kPi)).epsilon(1e-3));
  const double F = sf::aux_F(1.0), G = sf::aux_G(1.0);
  CHECK(v0(1.0) == doctest::Approx((-F + 2 * G - 1) / (8 * kPi)).epsilon(1e-14));
  CHECK(v0(1.0) == doctest::Approx(-0.09184058).epsilon(1e-7));
  CHECK(perfect_conductor_reduced(1.0).regime == Regime::perfect_conductor);
  CHECK(perfect_conductor_reduced(1.0).error_estimate >= 0.0);
  CHECK_THROWS_AS(perfect_conductor_reduced(0.0), DomainError);
  // The representation stays accurate far out: v0 x0 approaches -3/4pi
  // with a 1/x0^2 correction.
  for (double x0 : {1e4, 1e5, 1e6}) {
    CHECK(std::abs(v0(x0) * x0 + 3.0 / (4.0 * kPi)) <= 10.0 / (x0 * x0));
  }
}

TEST_CASE("nondispersive evaluator examples") {
  for (double x0 : {1e-3, 1.0, 10.0, 1e3}) CHECK(std::abs(v(x0, 1.0)) <= 1e-10);
  CHECK(v(1e-3, 3.0) == doctest::Approx(-0.0625).epsilon(5e-3));
  CHECK(v(1e-3, 1e6) == doctest::Approx(-0.125).epsilon(5e-3));
  CHECK(v(1e-3, 1e6) == doctest::Approx(v0(1e-3)).epsilon(5e-3));
  for (double x0 : {1e-3, 0.5, 20.0}) CHECK(v(x0, kInf) == doctest::Approx(v0(x0)).epsilon(1e-12));
  CHECK_THROWS_AS(reduced_potential_nondispersive(1.0, 0.99, kTol), ValidityError);
  CHECK_THROWS_AS(reduced_potential_nondispersive(0.0, 2.0, kTol), DomainError);
  CHECK_THROWS_AS(reduced_potential_nondispersive(1.0, 2.0, 0.0), DomainError);
}

TEST_CASE("nondispersive evaluator against the imaginary-frequency oracle") {
  for (double x0 : {1e-3, 0.1, 1.0, 10.0, 1e3}) {
    for (double eps : {1.01, 1.5, 2.0, 10.0, 100.0}) {
      const PotentialResult r = reduced_potential_nondispersive(x0, eps, 1e-12);
      const double ref = oracles::lifshitz_reduced(x0, eps, 1e-12);
      CAPTURE(x0);
      CAPTURE(eps);
      CHECK(r.v_reduced == doctest::Approx(ref).epsilon(1e-9));
      CHECK(std::abs(r.v_reduced - ref) <= std::max(1e-12, 10.0 * r.error_estimate) +
                                               1e-11 * std::abs(ref));
    }
  }
}

TEST_CASE("attractive, monotone in eps, sandwiched by the conductor") {
  for (double x0 : {1e-3, 1.0, 10.0}) {
    double prev = 0.0;
    for (double eps : {1.0, 1.5, 2.0, 4.0, 10.0, 100.0}) {
      const double val = v(x0, eps);
      CAPTURE(x0);
      CAPTURE(eps);
      CHECK(val <= 0.0);
      CHECK(val <= prev);
      CHECK(val >= v0(x0));
      prev = val;
    }
  }
}

TEST_CASE("short-distance convergence") {
  for (double eps : {1.5, 3.0, 10.0}) {
    const double d3 = std::abs(v(1e-3, eps) / short_range_reduced(eps) - 1.0);
    const double d4 = std::abs(v(1e-4, eps) / short_range_reduced(eps) - 1.0);
    CAPTURE(eps);
    CHECK(d3 < 5e-3);
    // First order in x0 up to logarithms: a decade in x0 buys at least 5x.
    CHECK(d4 < d3 / 5.0);
  }
}

TEST_CASE("long-distance convergence") {
  for (double eps : {1.1, 101.0}) {
    const double g = long_range_bracket_numeric(eps);
    const double d2 = std::abs(v(1e2, eps) * 1e2 / (-3.0 / (4.0 * kPi) * g) - 1.0);
    const double d3 = std::abs(v(1e3, eps) * 1e3 / (-3.0 / (4.0 * kPi) * g) - 1.0);
    CAPTURE(eps);
    CHECK(d2 < 1e-2);
    CHECK(d3 < d2 / 5.0);
    // The three-term series sits within 1% of the exact factor.
    const KappaRegime reg = eps < 2.0 ? KappaRegime::small : KappaRegime::large;
    CHECK(long_range_factor(eps - 1.0, {reg, 3}) == doctest::Approx(g).epsilon(1e-2));
  }
}

TEST_CASE("dispersive evaluator reproduces the constant medium") {
  const AtomParams atom{1.0, 1.0};
  const double tol = 1e-8;
  const PotentialResult d = reduced_potential_dispersive(1.0, DielectricModel::constant(2.0), atom, tol);
  const PotentialResult n = reduced_potential_nondispersive(1.0, 2.0, tol);
  CHECK(std::abs(d.v_reduced - n.v_reduced) <= 2.0 * tol);
  CHECK(std::abs(d.v_reduced - n.v_reduced) <= 2.0 * (d.error_estimate + n.error_estimate));
  for (double x0 : {0.1, 10.0}) {
    for (double eps : {1.5, 10.0}) {
      const PotentialResult a = reduced_potential_dispersive(x0, DielectricModel::constant(eps), atom, tol);
      CHECK(a.v_reduced == doctest::Approx(v(x0, eps)).epsilon(1e-6));
    }
  }
}

TEST_CASE("dispersive evaluator with a relaxation model") {
  const AtomParams atom{1.0, 1.0};
  CHECK(reduced_potential_dispersive(1.0, DielectricModel::single_relaxation(0.0, 1.0), atom, 1e-8)
            .v_reduced == 0.0);
  // The modes that matter at x0 = 1e-3 have k ~ 1/z = 2000 k0. When kc is
  // far above that the medium looks static with eps = 1 + chi0.
  const double ref = v(1e-3, 2.0);
  const double fast =
      reduced_potential_dispersive(1e-3, DielectricModel::single_relaxation(1.0, 1e5), atom, 1e-8)
          .v_reduced;
  CHECK(fast == doctest::Approx(ref).epsilon(0.05));
  CHECK(fast == doctest::Approx(ref).epsilon(1e-4));
  // kc = 100 k0 lies far below those modes and the wall is nearly transparent.
  const double slow =
      reduced_potential_dispersive(1e-3, DielectricModel::single_relaxation(1.0, 100.0), atom, 1e-8)
          .v_reduced;
  CHECK(slow < 0.0);
  CHECK(slow > 0.05 * ref);
  // Raising kc moves the potential monotonically toward the static value.
  double prev = 0.0;
  for (double kc : {1e2, 1e3, 1e4}) {
    const double val =
        reduced_potential_dispersive(1e-3, DielectricModel::single_relaxation(1.0, kc), atom, 1e-8)
            .v_reduced;
    CHECK(val < prev);
    CHECK(val >= ref - 1e-6);
    prev = val;
  }
}

TEST_CASE("dispersive evaluator rejects undecaying media") {
  const AtomParams atom{1.0, 1.0};
  const DielectricModel tab = DielectricModel::tabulated({{0.0, 2.0}, {10.0, 1.0}});
  CHECK_THROWS_AS(reduced_potential_dispersive(1.0, tab, atom, 1e-8), DivergentTailError);
}

TEST_CASE("short-range law") {
  CHECK(short_range_reduced(1.0) == 0.0);
  CHECK(short_range_reduced(3.0) == -1.0 / 16.0);
  CHECK(short_range_reduced(kInf) == -0.125);
  CHECK(short_range_reduced(1e300) == doctest::Approx(-0.125));
  CHECK_THROWS_AS(short_range_reduced(0.5), ValidityError);
}

TEST_CASE("long-range series factor") {
  CHECK(long_range_factor(kInf, {KappaRegime::large, 3}) == 1.0);
  CHECK(long_range_factor(100.0, {KappaRegime::large, 3}) == doctest::Approx(0.8896667).epsilon(1e-7));
  CHECK(long_range_factor(100.0, {KappaRegime::large, 1}) == 1.0);
  CHECK(long_range_factor(0.1, {KappaRegime::small, 3}) == doctest::Approx(0.0364337).epsilon(1e-6));
  CHECK(long_range_factor(0.1, {KappaRegime::small, 1}) == doctest::Approx(23.0 / 600.0).epsilon(1e-15));
  CHECK_THROWS_AS(long_range_factor(10.0, {KappaRegime::large, 3}), PreconditionError);
  CHECK_THROWS_AS(long_range_factor(0.3, {KappaRegime::small, 3}), PreconditionError);
  CHECK_THROWS_AS(long_range_factor(0.1, {KappaRegime::small, 4}), UnsupportedOrderError);
  CHECK_THROWS_AS(long_range_factor(0.1, {KappaRegime::small, 0}), UnsupportedOrderError);
  CHECK_NOTHROW(long_range_factor(10.0, {KappaRegime::large, 3}, {0.2, 10.0}));
}

TEST_CASE("pairwise integrated factor") {
  for (int n = 1; n <= 3; ++n) CHECK(pairwise_integrated_factor(0.0, n) == 1.0);
  CHECK(pairwise_integrated_factor(0.3, 3) == doctest::Approx(0.91).epsilon(1e-15));
  CHECK(pairwise_integrated_factor(0.1, 2) == doctest::Approx(0.9666667).epsilon(1e-7));
  CHECK_THROWS_AS(pairwise_integrated_factor(0.6, 3), PreconditionError);
  CHECK_THROWS_AS(pairwise_integrated_factor(0.1, 4), UnsupportedOrderError);
  // Leading terms: V_int = -(23/160 pi) kappa / z^4 in units of hbar c alpha0
  // against V = -(3/8 pi) g / z^4.
  for (double kappa : {0.01, 0.1, 0.2}) {
    const double g_int = (23.0 / (160.0 * kPi)) / (3.0 / (8.0 * kPi)) * kappa;
    CHECK(long_range_factor(kappa, {KappaRegime::small, 1}) == doctest::Approx(g_int).epsilon(1e-15));
  }
}

TEST_CASE("non-additivity ratio") {
  CHECK(nonadditivity_ratio(0.0, 3) == 0.0);
  CHECK(std::abs(nonadditivity_ratio(0.1, 3) + 0.0183725) <= 1e-7);
  CHECK(nonadditivity_ratio(0.1, 1) == doctest::Approx(-185.0 / 9660.0).epsilon(1e-15));
  for (int i = 1; i <= 20; ++i) {
    for (int n = 1; n <= 3; ++n) CHECK(nonadditivity_ratio(0.01 * i, n) < 0.0);
  }
  const auto c = nonadditivity_coefficients();
  const auto exact = oracles::nonadditivity_exact();
  for (int i = 0; i < 3; ++i) {
    CHECK(c[i].num == exact[i].num);
    CHECK(c[i].den == exact[i].den);
  }
  CHECK_THROWS_AS(nonadditivity_ratio(0.3, 3), PreconditionError);
  CHECK_THROWS_AS(nonadditivity_ratio(0.1, 0), UnsupportedOrderError);
}

TEST_CASE("non-additivity from the numerical long-range factor") {
  // 1 - V_int / V with the exact g(kappa) and the resummed pairwise
  // bracket 3 / (3 + kappa) agrees with the series to O(kappa^4).
  for (double kappa : {0.02, 0.05, 0.1}) {
    const double g = long_range_bracket_numeric(1.0 + kappa);
    const double ratio = 1.0 - (23.0 / 60.0) * kappa * 3.0 / (3.0 + kappa) / g;
    CAPTURE(kappa);
    CHECK(std::abs(ratio - nonadditivity_ratio(kappa, 3)) <= 0.05 * std::pow(kappa, 4));
  }
}

TEST_CASE("regularized bracket evaluators") {
  CHECK(short_range_bracket_numeric(1.0) == 0.0);
  CHECK(short_range_bracket_numeric(3.0) == doctest::Approx(0.5).epsilon(5e-3));
  CHECK(short_range_bracket_numeric(1e6) == doctest::Approx(1.0).epsilon(5e-3));
  for (double eps : {1.01, 1.5, 2.0, 8.0, 1e3}) {
    CHECK(short_range_bracket_numeric(eps) == doctest::Approx((eps - 1) / (eps + 1)).epsilon(1e-10));
    CHECK(long_range_bracket_numeric(eps) ==
          doctest::Approx(oracles::lifshitz_long_range_factor(eps)).epsilon(1e-10));
  }
  CHECK(long_range_bracket_numeric(kInf) == 1.0);
}

TEST_CASE("short-range factor from the kappa series") {
  // Small kappa: the leading-term bracket carries an O(kappa^2) error.
  for (double kappa : {1e-3, 1e-2, 0.1}) {
    const double s = short_range_series_bracket(kappa, {KappaRegime::small, 1});
    CHECK(std::abs(s - kappa / (2.0 + kappa)) <= 1.0 * kappa * kappa);
  }
  // Large kappa: the error falls faster than 1/kappa.
  double prev = 1.0;
  for (double kappa : {1e2, 1e3, 1e4}) {
    const double err = std::abs(short_range_series_bracket(kappa, {KappaRegime::large, 1}) -
                                kappa / (2.0 + kappa));
    CHECK(err <= 0.2 / kappa);
    CHECK(err < prev);
    prev = err;
  }
  CHECK_THROWS_AS(short_range_series_bracket(0.1, {KappaRegime::small, 2}), UnsupportedOrderError);
  CHECK_THROWS_AS(short_range_series_bracket(100.0, {KappaRegime::large, 2}), UnsupportedOrderError);
  CHECK_THROWS_AS(short_range_series_bracket(1.0, {KappaRegime::small, 1}), PreconditionError);
}

TEST_CASE("asymptotic potential") {
  const PotentialResult s = asymptotic_potential(0.01, 3.0);
  CHECK(s.regime == Regime::short_asymptotic);
  CHECK(s.v_reduced == -1.0 / 16.0);
  const PotentialResult l = asymptotic_potential(1e3, 3.0);
  CHECK(l.regime == Regime::long_asymptotic);
  CHECK(l.v_reduced == doctest::Approx(v(1e3, 3.0)).epsilon(1e-3));
  CHECK_THROWS_AS(asymptotic_potential(1.0, 3.0), PreconditionError);
  CHECK(std::string(to_string(Regime::general)) == "general");
}

TEST_CASE("physical units") {
  const AtomParams atom{1e7, 1e-30};
  CHECK(to_physical({0.0, 0.0, Regime::general}, atom, 1e-8, UnitSystem::si) == 0.0);
  // Choose z so that hbar c alpha0 k0 / z^3 = 8 eV; then v = -1/8 is -1 eV.
  const double eV = 1.602176634e-19;
  const PhysicalConstants pc = constants(UnitSystem::si);
  const double z = std::cbrt(pc.hbar * pc.c * atom.alpha0 * atom.k0 / (8.0 * eV));
  CHECK(to_physical({-0.125, 0.0, Regime::general}, atom, z, UnitSystem::si) / eV ==
        doctest::Approx(-1.0).epsilon(1e-14));
  const PotentialResult r = reduced_potential_nondispersive(2.0 * atom.k0 * z, 2.0, kTol);
  const double back = to_physical(r, atom, z, UnitSystem::si) / physical_prefactor(atom, z, UnitSystem::si);
  CHECK(std::abs(back / r.v_reduced - 1.0) <= 1e-15);
  CHECK(constants(UnitSystem::atomic).hbar == 1.0);
  CHECK(constants(UnitSystem::atomic).c == doctest::Approx(137.035999084));
  CHECK_THROWS_AS(physical_prefactor(atom, 0.0, UnitSystem::si), DomainError);
}
