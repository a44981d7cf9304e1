#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <span>
#include <vector>

#include "kgamma/accuracy.hpp"
#include "kgamma/simd.hpp"

namespace kgamma {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t subdivisions_used = 0;
  bool converged = false;
  /// ∫ |f|, the conditioning scale of the integral.
  double abs_value = 0.0;
};

namespace quad {

struct Panel {
  double a, b;
  double value, error, abs_value;
};

namespace detail {

// 21-point Kronrod nodes on [-1, 1] (positive half, descending), with the
// embedded 10-point Gauss rule on the odd-indexed nodes.
inline constexpr std::array<double, 11> kNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

inline constexpr std::array<double, 11> kKronrodHalf = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208734461665, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

inline constexpr std::array<double, 5> kGaussHalf = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

// Weights laid out to match the sample order used by gauss_kronrod_21:
// [center, +x0, -x0, +x1, -x1, ...].
struct Weights {
  std::array<double, 21> kronrod{};
  std::array<double, 21> gauss{};
};

inline const Weights& weights() {
  static const Weights w = [] {
    Weights out;
    out.kronrod[0] = kKronrodHalf[10];
    out.gauss[0] = 0.0;
    for (std::size_t i = 0; i < 10; ++i) {
      out.kronrod[1 + 2 * i] = out.kronrod[2 + 2 * i] = kKronrodHalf[i];
      const double g = (i % 2 == 1) ? kGaussHalf[i / 2] : 0.0;
      out.gauss[1 + 2 * i] = out.gauss[2 + 2 * i] = g;
    }
    return out;
  }();
  return w;
}

}  // namespace detail

/// One 21-point Gauss-Kronrod panel with the QUADPACK error heuristic.
template <class F>
Panel gauss_kronrod_21(F& f, double a, double b) {
  const auto& w = detail::weights();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<double, 21> fv{};
  fv[0] = f(center);
  for (std::size_t i = 0; i < 10; ++i) {
    const double dx = half * detail::kNodes[i];
    fv[1 + 2 * i] = f(center + dx);
    fv[2 + 2 * i] = f(center - dx);
  }
  std::array<double, 21> absv{};
  for (std::size_t i = 0; i < 21; ++i) absv[i] = std::abs(fv[i]);

  const double resk = simd::dot(fv, w.kronrod);
  const double resg = simd::dot(fv, w.gauss);
  const double resabs = simd::dot(absv, w.kronrod);
  const double mean = 0.5 * resk;
  std::array<double, 21> dev{};
  for (std::size_t i = 0; i < 21; ++i) dev[i] = std::abs(fv[i] - mean);
  const double resasc = simd::dot(dev, w.kronrod) * std::abs(half);

  constexpr double eps = std::numeric_limits<double>::epsilon();
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double abs_total = resabs * std::abs(half);
  if (abs_total > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * abs_total, err);
  return {a, b, resk * half, err, abs_total};
}

/// Globally adaptive Gauss-Kronrod integration over consecutive panels
/// [breaks[0], breaks[1]], [breaks[1], breaks[2]], ... The panel with the
/// largest error estimate is bisected until the summed estimate meets
/// max(abs_tol, rel_tol·|value|) or the subdivision budget runs out.
template <class F>
QuadratureResult integrate(F&& f, std::span<const double> breaks, const AccuracyPolicy& policy) {
  auto by_error = [](const Panel& l, const Panel& r) { return l.error < r.error; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(by_error)> active(by_error);
  std::vector<Panel> frozen;

  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (breaks[i + 1] > breaks[i]) active.push(gauss_kronrod_21(f, breaks[i], breaks[i + 1]));
  }

  auto totals = [&](double& value, double& error, double& abs_value) {
    value = error = abs_value = 0.0;
    auto copy = active;
    std::vector<Panel> all(frozen);
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    // Fixed order so the sum does not depend on heap layout.
    std::sort(all.begin(), all.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
    for (const auto& p : all) {
      value += p.value;
      error += p.error;
      abs_value += p.abs_value;
    }
  };

  double value = 0.0, error = 0.0, abs_value = 0.0;
  totals(value, error, abs_value);

  std::size_t subdivisions = 0;
  auto target = [&](double v) { return std::max(policy.abs_tol, policy.rel_tol * std::abs(v)); };
  while (!active.empty() && error > target(value) && subdivisions < policy.max_subdivisions) {
    Panel worst = active.top();
    active.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) ||
        (worst.b - worst.a) < 1e3 * std::numeric_limits<double>::epsilon() * std::max(std::abs(mid), 1e-300)) {
      frozen.push_back(worst);
      continue;
    }
    const Panel left = gauss_kronrod_21(f, worst.a, mid);
    const Panel right = gauss_kronrod_21(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    active.push(left);
    active.push(right);
    ++subdivisions;
  }

  QuadratureResult out;
  totals(out.value, out.error_estimate, out.abs_value);
  out.subdivisions_used = subdivisions;
  out.converged = std::isfinite(out.value) && out.error_estimate <= target(out.value);
  return out;
}

/// ∫_{breaks[0]}^∞ f, truncated at an upper limit T where tail_bound(T), a
/// rigorous bound on ∫_T^∞ |f|, falls below 1e-2 of the accuracy target.
/// T starts at max(initial_upper, last break) · truncation_factor and doubles
/// as needed. The tail bound is added to the reported error.
template <class F, class Tail>
QuadratureResult integrate_to_infinity(F&& f, std::vector<double> breaks, double initial_upper, Tail&& tail_bound,
                                       const AccuracyPolicy& policy, double truncation_factor = 1.0) {
  // The panels get 99% of the error budget and the truncated tail 1%.
  AccuracyPolicy inner = policy;
  inner.rel_tol *= 0.99;
  inner.abs_tol *= 0.99;
  double upper = std::max(initial_upper, breaks.back()) * truncation_factor;
  auto with_upper = [&](double t) {
    std::vector<double> b;
    for (double v : breaks)
      if (v < t) b.push_back(v);
    b.push_back(t);
    return b;
  };
  QuadratureResult res = integrate(f, with_upper(upper), inner);
  for (int attempt = 0; attempt < 64; ++attempt) {
    const double target = 1e-2 * std::max(policy.abs_tol, policy.rel_tol * std::abs(res.value));
    const double tail = tail_bound(upper);
    if (tail <= target) {
      res.error_estimate += tail;
      res.converged = res.converged && res.error_estimate <= std::max(policy.abs_tol, policy.rel_tol * std::abs(res.value));
      return res;
    }
    // Grow until the bound is met for the current magnitude, then redo.
    double grown = upper;
    for (int i = 0; i < 64 && tail_bound(grown) > target; ++i) grown *= 2.0;
    if (grown == upper) grown *= 2.0;
    breaks.push_back(upper);
    upper = grown;
    res = integrate(f, with_upper(upper), inner);
  }
  res.converged = false;
  res.error_estimate += tail_bound(upper);
  return res;
}

}  // namespace quad
}  // namespace kgamma
