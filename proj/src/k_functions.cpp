#include "kgamma/k_functions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "kgamma/errors.hpp"
#include "kgamma/kernels.hpp"

namespace kgamma {

namespace {

bool positive_finite(double v) { return v > 0.0 && std::isfinite(v); }

const double kLogMax = std::log(std::numeric_limits<double>::max());

// (p^{y}/k) Γ(y) with y = x/k. The direct product keeps exact results exact
// (Γ(5) = 24 at k = p = 1); the log form covers a large Γ(y) against a
// small prefactor.
double scaled_gamma(double x, double k, double p, const AccuracyPolicy& policy, const char* fn) {
  const double y = x / k;
  const double log_prefactor = y * std::log(p) - std::log(k);
  const double log_result = log_prefactor + kernels::log_gamma(y, policy);
  if (log_result > kLogMax) throw OverflowError(std::string(fn) + ": result exceeds the double range");
  if (y < 171.0) {
    const double prefactor = std::exp(log_prefactor);
    const double value = prefactor * kernels::gamma(y, policy);
    if (std::isfinite(value) && value > 0.0) return value;
  }
  return std::exp(log_result);
}

void check_zeta_args(double x, double k, const char* fn) {
  if (!positive_finite(k)) detail::domain_fail(fn, "k > 0");
  if (!std::isfinite(x) || !(x / k > 1.0)) detail::domain_fail(fn, "x/k > 1");
}

void check_order(int n, const char* fn) {
  if (n < 0) detail::domain_fail(fn, "n >= 0");
  if (n > kMaxDerivOrder) {
    throw UnsupportedOrder(std::string(fn) + ": order n = " + std::to_string(n) + " exceeds the cap n <= 8");
  }
}

}  // namespace

void EvalPoint::validate() const {
  if (!positive_finite(x)) detail::domain_fail("EvalPoint", "x > 0");
  if (!positive_finite(k)) detail::domain_fail("EvalPoint", "k > 0");
  if (p && !positive_finite(*p)) detail::domain_fail("EvalPoint", "p > 0");
}

void EvalPoint::validate_with_p() const {
  if (!p) detail::domain_fail("EvalPoint", "p present");
  validate();
}

FractionalOrder::FractionalOrder(double s) : s_(s) {
  if (!(s >= 1.0) || !std::isfinite(s)) detail::domain_fail("FractionalOrder", "s >= 1");
}

double k_gamma(const EvalPoint& pt, const AccuracyPolicy& policy) {
  pt.validate();
  return scaled_gamma(pt.x, pt.k, pt.k, policy, "k_gamma");
}

double pk_gamma(const EvalPoint& pt, const AccuracyPolicy& policy) {
  pt.validate_with_p();
  return scaled_gamma(pt.x, pt.k, *pt.p, policy, "pk_gamma");
}

double k_polygamma(int m, const EvalPoint& pt, const AccuracyPolicy& policy) {
  pt.validate();
  if (m < 1) detail::domain_fail("k_polygamma", "m >= 1");
  if (m > kernels::kMaxPolygammaOrder) {
    throw UnsupportedOrder("k_polygamma: order m = " + std::to_string(m) + " exceeds the cap m <= 12");
  }
  double factorial = 1.0;
  for (int i = 2; i <= m; ++i) factorial *= i;
  const double sign = (m % 2 == 1) ? 1.0 : -1.0;
  const double scale = std::pow(pt.k, -(m + 1.0));
  return sign * factorial * scale * kernels::hurwitz_zeta(m + 1.0, pt.x / pt.k, policy);
}

double k_polygamma_magnitude_fractional(FractionalOrder s, const EvalPoint& pt, const AccuracyPolicy& policy) {
  pt.validate();
  const double order = s.value();
  const double rounded = std::round(order);
  if (rounded == order && order <= kernels::kMaxPolygammaOrder) {
    return std::abs(k_polygamma(static_cast<int>(rounded), pt, policy));
  }
  const double log_mag =
      kernels::log_gamma(order + 1.0, policy) - (order + 1.0) * std::log(pt.k);
  if (log_mag > kLogMax) throw OverflowError("k_polygamma_magnitude_fractional: result exceeds the double range");
  return std::exp(log_mag) * kernels::hurwitz_zeta(order + 1.0, pt.x / pt.k, policy);
}

double k_zeta(double x, double k, const AccuracyPolicy& policy) {
  check_zeta_args(x, k, "k_zeta");
  return kernels::riemann_zeta(x / k, policy);
}

double pk_zeta(double x, double k, double p, const AccuracyPolicy& policy) {
  check_zeta_args(x, k, "pk_zeta");
  if (!positive_finite(p)) detail::domain_fail("pk_zeta", "p > 0");
  return kernels::riemann_zeta(x / k, policy);
}

KGammaDerivatives pk_gamma_derivatives(int n_max, const EvalPoint& pt, const AccuracyPolicy& policy) {
  pt.validate_with_p();
  check_order(n_max, "pk_gamma_derivatives");
  const double x = pt.x, k = pt.k, p = *pt.p;
  const double y = x / k;
  const auto g = kernels::gamma_derivatives(n_max, y, policy);

  const double log_prefactor = y * std::log(p) - std::log(k);
  if (log_prefactor + kernels::log_gamma(y, policy) > kLogMax) {
    throw OverflowError("pk_gamma_derivatives: result exceeds the double range");
  }
  const double prefactor = std::exp(log_prefactor);
  const double outer = std::log(p) / k;  // d/dx of the exponent y ln p
  const double inner = 1.0 / k;          // dy/dx

  KGammaDerivatives out;
  out.value.assign(n_max + 1, 0.0);
  out.scale.assign(n_max + 1, 0.0);
  for (int n = 0; n <= n_max; ++n) {
    double binom = 1.0;
    double inner_pow = 1.0;
    double sum = 0.0, scale = 0.0;
    for (int j = 0; j <= n; ++j) {
      double outer_pow = 1.0;
      for (int i = 0; i < n - j; ++i) outer_pow *= outer;
      const double c = binom * outer_pow * inner_pow;
      sum += c * g.value[j];
      scale += std::abs(c) * g.scale[j];
      binom = binom * (n - j) / (j + 1);
      inner_pow *= inner;
    }
    out.value[n] = prefactor * sum;
    out.scale[n] = prefactor * scale;
    if (!std::isfinite(out.value[n]) || !std::isfinite(out.scale[n])) {
      throw OverflowError("pk_gamma_derivatives: order " + std::to_string(n) + " overflows");
    }
  }
  // Order 0 goes through the same path as pk_gamma.
  out.value[0] = scaled_gamma(x, k, p, policy, "pk_gamma_derivatives");
  out.scale[0] = out.value[0];
  return out;
}

double k_gamma_deriv(int n, const EvalPoint& pt, const AccuracyPolicy& policy) {
  pt.validate();
  check_order(n, "k_gamma_deriv");
  return pk_gamma_derivatives(n, EvalPoint{pt.x, pt.k, pt.k}, policy).value[n];
}

double pk_gamma_deriv(int n, const EvalPoint& pt, const AccuracyPolicy& policy) {
  pt.validate_with_p();
  check_order(n, "pk_gamma_deriv");
  return pk_gamma_derivatives(n, pt, policy).value[n];
}

}  // namespace kgamma
