// Copyright 2026 The cpwall Authors
// SPDX-License-Identifier: Apache-2.0

#include "cpwall/quadrature.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "cpwall/errors.hpp"

namespace cpwall {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// 21-point Kronrod extension of the 10-point Gauss rule. Odd indices of
// kXgk are the Gauss nodes.
constexpr double kXgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr double kWgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600016060395, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr double kWg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool at_floor;  // error is pure roundoff; splitting cannot help
};

bool operator<(const Segment& x, const Segment& y) { return x.error < y.error; }

double checked(const RealIntegrand& g, double x) {
  const double v = g(x);
  if (!std::isfinite(v)) {
    throw DomainError("integrand is not finite at x = " + num(x));
  }
  return v;
}

Segment gauss_kronrod(const RealIntegrand& g, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = checked(g, c);
  double resk = kWgk[10] * fc;
  double resg = 0.0;
  double resabs = std::abs(resk);
  double fv1[10], fv2[10];
  for (int j = 0; j < 10; ++j) {
    const double dx = h * kXgk[j];
    fv1[j] = checked(g, c - dx);
    fv2[j] = checked(g, c + dx);
    const double s = fv1[j] + fv2[j];
    resk += kWgk[j] * s;
    resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * s;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[10] * std::abs(fc - mean);
  for (int j = 0; j < 10; ++j) {
    resasc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
  }
  const double ah = std::abs(h);
  double err = std::abs((resk - resg) * h);
  resasc *= ah;
  resabs *= ah;
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  bool floor = false;
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    const double round = 50.0 * kEps * resabs;
    floor = err <= round;
    err = std::max(round, err);
  }
  return {a, b, resk * h, err, floor};
}

}  // namespace

QuadratureResult adaptive_integrate(const RealIntegrand& g, double a, double b,
                                    double tol, const AdaptiveOptions& options) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw DomainError("adaptive_integrate: need finite a < b");
  }
  if (!(tol > 0.0)) throw DomainError("adaptive_integrate: tol must be > 0");

  std::vector<double> cuts{a};
  for (double p : options.breakpoints) {
    if (p > a && p < b) cuts.push_back(p);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Segment> heap;
  std::vector<Segment> frozen;
  std::size_t evals = 0;
  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    heap.push_back(gauss_kronrod(g, cuts[i], cuts[i + 1]));
    evals += 21;
    total += heap.back().value;
    total_err += heap.back().error;
  }
  std::make_heap(heap.begin(), heap.end());

  auto target = [&] { return std::max(tol, options.rel_tol * std::abs(total)); };
  while (total_err > target() && !heap.empty()) {
    if (evals + 42 > options.max_evaluations) {
      throw BudgetExceededError("adaptive_integrate: evaluation budget exhausted",
                                total, total_err);
    }
    std::pop_heap(heap.begin(), heap.end());
    Segment worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    const double scale = std::max(std::abs(worst.a), std::abs(worst.b));
    if (worst.at_floor || !(mid > worst.a && mid < worst.b) ||
        worst.b - worst.a < 32.0 * kEps * scale) {
      frozen.push_back(worst);
      continue;
    }
    Segment left = gauss_kronrod(g, worst.a, mid);
    Segment right = gauss_kronrod(g, mid, worst.b);
    evals += 42;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end());
  }

  // Re-sum from scratch to shed the drift of the running totals.
  heap.insert(heap.end(), frozen.begin(), frozen.end());
  std::sort(heap.begin(), heap.end(),
            [](const Segment& x, const Segment& y) { return x.a < y.a; });
  double sum = 0.0, comp = 0.0, err = 0.0;
  for (const auto& s : heap) {
    const double y = s.value - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    err += s.error;
  }
  return {sum, err, evals};
}

// ---------------------------------------------------------------------------

DeltaSchedule DeltaSchedule::geometric(double first, double ratio, int count, int order) {
  DeltaSchedule s;
  s.extrapolation_order = order;
  double d = first;
  for (int i = 0; i < count; ++i) {
    s.deltas.push_back(d);
    d *= ratio;
  }
  s.validate();
  return s;
}

DeltaSchedule DeltaSchedule::standard() { return geometric(1e-2, 0.5, 7, 3); }

DeltaSchedule DeltaSchedule::for_order(int singularity_order) {
  if (singularity_order <= 2) return standard();
  const double ratio = std::sqrt(0.5);
  if (singularity_order <= 4) return geometric(0.16, ratio, 10, 5);
  return geometric(0.3, ratio, 12, 5);
}

void DeltaSchedule::validate() const {
  if (deltas.size() < 3) throw DomainError("DeltaSchedule: need at least 3 deltas");
  if (extrapolation_order < 0) {
    throw DomainError("DeltaSchedule: extrapolation order must be >= 0");
  }
  const double r = deltas[1] / deltas[0];
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (!(deltas[i] > 0.0) || !std::isfinite(deltas[i])) {
      throw DomainError("DeltaSchedule: deltas must be finite and > 0");
    }
    if (i > 0) {
      const double ri = deltas[i] / deltas[i - 1];
      if (!(ri < 1.0) || std::abs(ri - r) > 1e-9 * r) {
        throw DomainError("DeltaSchedule: deltas must decrease with a constant ratio");
      }
    }
  }
}

namespace {

// Re int g(t + i delta) dt on the requested interval.
QuadratureResult shifted_integral(const ComplexIntegrand& g, FinitePartInterval interval,
                                  double delta, const FinitePartOptions& options) {
  const double shift = options.side == ShiftSide::upper ? delta : -delta;
  RealIntegrand re = [&](double t) { return g({t, shift}).real(); };
  AdaptiveOptions ao;
  ao.rel_tol = options.quadrature_rel_tol;
  for (double p = delta; p < 1.0; p *= 2.0) {
    ao.breakpoints.push_back(p);
    if (interval == FinitePartInterval::symmetric) ao.breakpoints.push_back(-p);
  }
  const double lo = interval == FinitePartInterval::symmetric ? -1.0 : 0.0;
  QuadratureResult r = adaptive_integrate(re, lo, 1.0, 1e-300, ao);
  if (interval == FinitePartInterval::doubled_half) {
    r.value *= 2.0;
    r.error_estimate *= 2.0;
  }
  return r;
}

struct Fit {
  double constant;
  double residual;
};

// Least-squares fit of I(delta) on the structural basis; returns the
// delta-independent coefficient.
Fit fit_constant(const std::vector<double>& deltas, const std::vector<double>& values,
                 int order, int corrections, bool log_terms) {
  using Basis = std::function<double(double)>;
  std::vector<Basis> basis;
  basis.push_back([](double) { return 1.0; });
  if (order >= 1) basis.push_back([](double d) { return std::log(d); });
  // Only even inverse powers survive in the real part.
  for (int j = 2; j <= order - 1; j += 2) {
    basis.push_back([j](double d) { return std::pow(d, -j); });
  }
  if (log_terms) {
    for (int m = 1; m <= corrections; ++m) {
      basis.push_back([m](double d) { return std::pow(d, m); });
      if (m % 2 == 0) basis.push_back([m](double d) { return std::pow(d, m) * std::log(d); });
    }
  } else {
    for (int m = 1; m <= corrections; ++m) {
      basis.push_back([m](double d) { return std::pow(d, 2 * m); });
    }
  }
  const auto n = static_cast<Eigen::Index>(deltas.size());
  const auto p = static_cast<Eigen::Index>(basis.size());
  if (p >= n) {
    throw DomainError("finite_part_integrate: schedule has " + std::to_string(n) +
                      " deltas but the fit needs more than " + std::to_string(p));
  }
  Eigen::MatrixXd A(n, p);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = 0; k < p; ++k) A(i, k) = basis[k](deltas[i]);
    y(i) = values[i];
  }
  Eigen::VectorXd scale = A.colwise().norm().transpose();
  for (Eigen::Index k = 0; k < p; ++k) A.col(k) /= scale(k);
  const Eigen::VectorXd c = A.colPivHouseholderQr().solve(y);
  const double residual = (A * c - y).cwiseAbs().maxCoeff();
  return {c(0) / scale(0), residual};
}

}  // namespace

FinitePartResult finite_part_integrate(const ComplexIntegrand& g,
                                       FinitePartInterval interval,
                                       int singularity_order,
                                       const DeltaSchedule& schedule,
                                       const FinitePartOptions& options) {
  if (singularity_order < 0) {
    throw DomainError("finite_part_integrate: singularity order must be >= 0");
  }
  if (singularity_order > 5) {
    throw UnsupportedOrderError("finite_part_integrate: singularity order above 5");
  }
  schedule.validate();

  FinitePartResult out;
  std::vector<double> values;
  double quad_err = 0.0;
  for (double d : schedule.deltas) {
    const QuadratureResult r = shifted_integral(g, interval, d, options);
    values.push_back(r.value);
    quad_err = std::max(quad_err, r.error_estimate);
    out.evaluations += r.evaluations;
  }

  const int m = schedule.extrapolation_order;
  const Fit full = fit_constant(schedule.deltas, values, singularity_order, m,
                                options.log_terms);
  // A correct fit leaves roundoff of the largest shifted integral; a
  // misdeclared order leaves a misfit of the size of the divergence.
  double largest = 0.0;
  for (double v : values) largest = std::max(largest, std::abs(v));
  const double allowed = std::max(options.residual_tol, 1e4 * kEps * largest);
  if (!(full.residual <= allowed)) {
    throw RegularizationError(
        "finite_part_integrate: extrapolation residual " + num(full.residual) +
        " exceeds " + num(allowed) +
        "; the declared singularity order is probably wrong");
  }
  // Spread between fits with and without the largest delta.
  double spread = 0.0;
  {
    std::vector<double> d2(schedule.deltas.begin() + 1, schedule.deltas.end());
    std::vector<double> v2(values.begin() + 1, values.end());
    try {
      spread = std::abs(fit_constant(d2, v2, singularity_order, m, options.log_terms).constant -
                        full.constant);
    } catch (const DomainError&) {
      spread = full.residual;
    }
  }
  out.value = full.constant;
  out.residual = full.residual;
  out.error_estimate = spread + full.residual + quad_err;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Wynn's epsilon algorithm on the partial sums; returns the estimate from
// the deepest even column and the change from the previous row.
struct Accelerated {
  double value;
  double change;
};

Accelerated wynn_epsilon(const std::vector<double>& s) {
  const std::size_t n = s.size();
  std::vector<double> prev(n + 1, 0.0);  // column -1
  std::vector<double> cur(s.begin(), s.end());
  double best = s.back();
  double best_prev = n >= 2 ? s[n - 2] : s.back();
  for (std::size_t col = 1; cur.size() >= 2; ++col) {
    std::vector<double> next(cur.size() - 1);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const double diff = cur[i + 1] - cur[i];
      if (diff == 0.0) return {cur[i + 1], 0.0};
      next[i] = prev[i + 1] + 1.0 / diff;
    }
    prev.assign(cur.begin(), cur.end());
    cur.swap(next);
    if (col % 2 == 0 && !cur.empty()) {
      best = cur.back();
      best_prev = cur.size() >= 2 ? cur[cur.size() - 2] : best_prev;
    }
  }
  return {best, std::abs(best - best_prev)};
}

}  // namespace

QuadratureResult semiinfinite_oscillatory_integrate(const RealIntegrand& g,
                                                    double k_break, double tol,
                                                    const OscillatoryOptions& options) {
  if (!(k_break > 0.0) || !std::isfinite(k_break)) {
    throw DomainError("semiinfinite_oscillatory_integrate: k_break must be > 0");
  }
  if (!(tol > 0.0)) throw DomainError("semiinfinite_oscillatory_integrate: tol must be > 0");
  if (!(options.wavelength > 0.0)) {
    throw DomainError("semiinfinite_oscillatory_integrate: wavelength must be > 0");
  }
  AdaptiveOptions ao;
  ao.rel_tol = options.rel_tol;
  QuadratureResult head = adaptive_integrate(g, 0.0, k_break, 0.25 * tol, ao);

  const double half = 0.5 * options.wavelength;
  const double lobe_tol = 0.01 * tol;
  std::vector<double> lobes;
  std::vector<double> partial;  // tail partial sums
  std::size_t evals = head.evaluations;
  double lobe_err = 0.0;
  double tail = 0.0;
  double last_estimate = std::numeric_limits<double>::quiet_NaN();
  int stable = 0;
  constexpr std::size_t kWindow = 40;

  for (std::size_t n = 0; n < options.max_lobes; ++n) {
    const double a = k_break + static_cast<double>(n) * half;
    const QuadratureResult r = adaptive_integrate(g, a, a + half, lobe_tol, ao);
    evals += r.evaluations;
    lobe_err += r.error_estimate;
    lobes.push_back(r.value);
    tail += r.value;
    partial.push_back(tail);

    const double target = std::max(tol, options.rel_tol * std::abs(head.value + tail));
    // Direct convergence: three consecutive negligible lobes.
    if (n >= 3) {
      bool small = true;
      for (std::size_t j = n - 2; j <= n; ++j) small &= std::abs(lobes[j]) < 0.01 * target;
      if (small) {
        return {head.value + tail, head.error_estimate + lobe_err + 3.0 * std::abs(lobes[n]),
                evals};
      }
    }
    if (n < 6) continue;

    bool alternating = true;
    for (std::size_t j = n - 5; j <= n; ++j) {
      if (lobes[j] * lobes[j - 1] >= 0.0) alternating = false;
    }
    if (!alternating) {
      if (n >= 20) {
        throw AccelerationError(
            "semiinfinite_oscillatory_integrate: tail lobes do not alternate at k = " +
            num(a));
      }
      continue;
    }
    const std::size_t start = partial.size() > kWindow ? partial.size() - kWindow : 0;
    const std::vector<double> window(partial.begin() + static_cast<std::ptrdiff_t>(start),
                                     partial.end());
    const Accelerated acc = wynn_epsilon(window);
    const double change = std::isnan(last_estimate) ? std::abs(acc.value)
                                                    : std::abs(acc.value - last_estimate);
    last_estimate = acc.value;
    const double err = std::max(change, acc.change);
    stable = (err < 0.1 * target) ? stable + 1 : 0;
    if (stable >= 2 && n >= 8) {
      return {head.value + acc.value, head.error_estimate + lobe_err + err, evals};
    }
  }
  throw BudgetExceededError("semiinfinite_oscillatory_integrate: lobe budget exhausted",
                            head.value + (std::isnan(last_estimate) ? tail : last_estimate),
                            std::abs(lobes.empty() ? 0.0 : lobes.back()));
}

}  // namespace cpwall
