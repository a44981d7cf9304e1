#include "kgamma/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "kgamma/errors.hpp"

namespace kgamma::oracle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double pow_int(double base, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= base;
  return r;
}

// Bound on ∫_T^∞ t^{β-1} e^{-t^k/c} dt for T >= 1. With u = t^k/c this is
// (c^{β/k}/k) Γ(α, U), α = β/k, U = T^k/c, and
//   Γ(α, U) <= U^{α-1} e^{-U}                 for α <= 1,
//   Γ(α, U) <= 2 U^{α-1} e^{-U}               for U >= 2(α-1).
// Returns +inf when neither case applies yet.
double stretched_exp_tail(double T, double beta, double k, double c) {
  const double alpha = beta / k;
  const double U = std::pow(T, k) / c;
  double log_factor;
  if (alpha <= 1.0) {
    log_factor = 0.0;
  } else if (U >= 2.0 * (alpha - 1.0)) {
    log_factor = std::log(2.0);
  } else {
    return kInf;
  }
  const double log_bound = (beta / k) * std::log(c) - std::log(k) + (alpha - 1.0) * std::log(U) - U + log_factor;
  return std::exp(log_bound);
}

// Bound on ∫_V^∞ vⁿ e^{-x v} dv for V >= 2n/x:  <= 2 Vⁿ e^{-xV} / x.
double exp_poly_tail(double V, int n, double x) {
  if (V < 2.0 * n / x) return kInf;
  return std::exp(std::log(2.0 / x) + n * std::log(std::max(V, 1e-300)) - x * V);
}

// Combines two halves. When they cancel, the halves are recomputed against
// the tighter relative target the combined value needs.
template <class Halves>
QuadratureResult combine(Halves&& halves, const AccuracyPolicy& policy) {
  auto [lo, hi] = halves(policy);
  auto merge = [](const QuadratureResult& a, const QuadratureResult& b) {
    QuadratureResult r;
    r.value = a.value + b.value;
    r.error_estimate = a.error_estimate + b.error_estimate;
    r.subdivisions_used = a.subdivisions_used + b.subdivisions_used;
    r.abs_value = a.abs_value + b.abs_value;
    r.converged = a.converged && b.converged;
    return r;
  };
  QuadratureResult r = merge(lo, hi);
  auto tol = [&](const QuadratureResult& q) { return std::max(policy.abs_tol, policy.rel_tol * std::abs(q.value)); };
  if (r.error_estimate > tol(r)) {
    const double parts = std::abs(lo.value) + std::abs(hi.value);
    if (parts > 0.0 && std::abs(r.value) > 0.0) {
      AccuracyPolicy tight = policy;
      tight.rel_tol = std::max(policy.rel_tol * std::abs(r.value) / parts, 1e-15);
      auto [lo2, hi2] = halves(tight);
      r = merge(lo2, hi2);
    }
  }
  r.converged = r.converged && r.error_estimate <= tol(r);
  return r;
}

// ∫_0^∞ t^{x-1} e^{-t^k/c} logⁿ t dt, split at t = 1.
QuadratureResult gamma_family(int n, double x, double k, double c, const AccuracyPolicy& policy,
                              double truncation_factor) {
  auto halves = [&](const AccuracyPolicy& pol) {
    // (0, 1]: t = e^{-v} maps the geometric grading toward t = 0 onto a
    // uniform one; the integrand becomes e^{-xv} e^{-e^{-kv}/c} (-v)ⁿ.
    auto near = [=](double v) { return std::exp(-x * v - std::exp(-k * v) / c) * pow_int(-v, n); };
    auto near_tail = [=](double V) { return exp_poly_tail(V, n, x); };
    const double v_peak = n / x;
    std::vector<double> near_breaks{0.0};
    if (v_peak > 0.0) near_breaks.push_back(v_peak);
    const QuadratureResult lo =
        quad::integrate_to_infinity(near, near_breaks, std::max(1.0, 4.0 * v_peak) + 30.0 / x, near_tail, pol,
                                    truncation_factor);

    // [1, ∞): direct. Since log t <= t there, the tail is dominated by
    // ∫_T^∞ t^{x+n-1} e^{-t^k/c} dt.
    auto far = [=](double t) { return std::pow(t, x - 1.0) * std::exp(-std::pow(t, k) / c) * pow_int(std::log(t), n); };
    auto far_tail = [=](double T) { return stretched_exp_tail(T, x + n, k, c); };
    std::vector<double> far_breaks{1.0};
    if (x > 1.0) {
      const double mode = std::pow(c * (x - 1.0), 1.0 / k);
      if (mode > 1.0) far_breaks.push_back(mode);
    }
    const double start = std::max(2.0 * far_breaks.back(), std::pow(c * 30.0, 1.0 / k));
    const QuadratureResult hi = quad::integrate_to_infinity(far, far_breaks, start, far_tail, pol, truncation_factor);
    return std::pair{lo, hi};
  };
  return combine(halves, policy);
}

void check_point(const EvalPoint& pt, const char* fn) {
  if (!(pt.x > 0.0) || !std::isfinite(pt.x)) detail::domain_fail(fn, "x > 0");
  if (!(pt.k > 0.0) || !std::isfinite(pt.k)) detail::domain_fail(fn, "k > 0");
  if (pt.p && (!(*pt.p > 0.0) || !std::isfinite(*pt.p))) detail::domain_fail(fn, "p > 0");
}

// 1 / (1 - e^{-z}). Below z = 1e-3 the expansion 1/z + 1/2 + z/12 is used
// (remainder z^3/720, under 1e-15 relative there), so the integrand is never
// evaluated through the 0/0 form at t = 0.
double bose_factor(double z) {
  if (z < 1e-3) return 1.0 / z + 0.5 + z / 12.0;
  return -1.0 / std::expm1(-z);
}

}  // namespace

QuadratureResult integrate_k_gamma(const EvalPoint& pt, const AccuracyPolicy& policy, double truncation_factor) {
  check_point(pt, "integrate_k_gamma");
  return gamma_family(0, pt.x, pt.k, pt.k, policy, truncation_factor);
}

QuadratureResult integrate_pk_gamma(const EvalPoint& pt, const AccuracyPolicy& policy, double truncation_factor) {
  check_point(pt, "integrate_pk_gamma");
  if (!pt.p) detail::domain_fail("integrate_pk_gamma", "p present");
  return gamma_family(0, pt.x, pt.k, *pt.p, policy, truncation_factor);
}

QuadratureResult integrate_k_gamma_deriv(int n, const EvalPoint& pt, bool use_p, const AccuracyPolicy& policy,
                                         double truncation_factor) {
  check_point(pt, "integrate_k_gamma_deriv");
  if (n < 0) detail::domain_fail("integrate_k_gamma_deriv", "n >= 0");
  if (n > kMaxDerivOrder) throw UnsupportedOrder("integrate_k_gamma_deriv: order exceeds the cap n <= 8");
  if (use_p && !pt.p) detail::domain_fail("integrate_k_gamma_deriv", "p present");
  return gamma_family(n, pt.x, pt.k, use_p ? *pt.p : pt.k, policy, truncation_factor);
}

QuadratureResult integrate_k_polygamma_fractional(double s, const EvalPoint& pt, const AccuracyPolicy& policy,
                                                  double truncation_factor) {
  check_point(pt, "integrate_k_polygamma");
  if (!(s >= 1.0) || !std::isfinite(s)) detail::domain_fail("integrate_k_polygamma", "m >= 1");
  const double x = pt.x, k = pt.k;
  auto f = [=](double t) { return std::pow(t, s) * std::exp(-x * t) * bose_factor(k * t); };
  // For T >= 2s/x:  ∫_T^∞ t^s e^{-xt} dt <= 2 T^s e^{-xT} / x, and the
  // Bose factor is at most its value at T.
  auto tail = [=](double T) {
    if (T < 2.0 * s / x) return kInf;
    return bose_factor(k * T) * std::exp(std::log(2.0 / x) + s * std::log(T) - x * T);
  };
  std::vector<double> breaks{0.0, 1e-3 / k};
  const double mode = s / x;
  if (mode > breaks.back()) breaks.push_back(mode);
  return quad::integrate_to_infinity(f, breaks, 4.0 * mode + 30.0 / x, tail, policy, truncation_factor);
}

QuadratureResult integrate_k_polygamma(int m, const EvalPoint& pt, const AccuracyPolicy& policy,
                                       double truncation_factor) {
  if (m < 1) detail::domain_fail("integrate_k_polygamma", "m >= 1");
  return integrate_k_polygamma_fractional(static_cast<double>(m), pt, policy, truncation_factor);
}

QuadratureResult integrate_bose(double s, double k, double c, const AccuracyPolicy& policy,
                                double truncation_factor) {
  if (!(k > 0.0) || !std::isfinite(k)) detail::domain_fail("integrate_bose", "k > 0");
  if (!(c > 0.0) || !std::isfinite(c)) detail::domain_fail("integrate_bose", "c > 0");
  if (!std::isfinite(s) || !(s - k > -1.0)) detail::domain_fail("integrate_bose", "s - k > -1");
  auto halves = [&](const AccuracyPolicy& pol) {
    // (0, 1] with t = e^{-v}: e^{-(s+1)v} / expm1(e^{-kv}/c). Since
    // 1/expm1(z) <= 1/z the tail beyond V is at most c e^{-γV}/γ with
    // γ = s + 1 - k > 0.
    const double decay = s + 1.0 - k;
    auto near = [=](double v) { return std::exp(-(s + 1.0) * v) / std::expm1(std::exp(-k * v) / c); };
    auto near_tail = [=](double V) { return c * std::exp(-decay * V) / decay; };
    const QuadratureResult lo =
        quad::integrate_to_infinity(near, {0.0}, 30.0 / decay, near_tail, pol, truncation_factor);

    // [1, ∞): 1/expm1(u) <= e^{-u} / (1 - e^{-1/c}) for u >= 1/c.
    auto far = [=](double t) { return std::pow(t, s) / std::expm1(std::pow(t, k) / c); };
    const double guard = 1.0 / -std::expm1(-1.0 / c);
    auto far_tail = [=](double T) { return guard * stretched_exp_tail(T, s + 1.0, k, c); };
    const QuadratureResult hi =
        quad::integrate_to_infinity(far, {1.0}, std::max(2.0, std::pow(c * 30.0, 1.0 / k)), far_tail, pol,
                                    truncation_factor);
    return std::pair{lo, hi};
  };
  return combine(halves, policy);
}

}  // namespace kgamma::oracle
