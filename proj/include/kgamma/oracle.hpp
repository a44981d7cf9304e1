#pragma once

#include "kgamma/accuracy.hpp"
#include "kgamma/k_functions.hpp"
#include "kgamma/quadrature.hpp"

// Direct numerical integration of the defining integrals. Nothing here calls
// the closed-form kernels; the two paths meet only in tests and crosscheck.
namespace kgamma::oracle {

/// ∫_0^∞ t^{x-1} e^{-t^k/k} dt
QuadratureResult integrate_k_gamma(const EvalPoint& pt, const AccuracyPolicy& policy = AccuracyPolicy::oracle(),
                                   double truncation_factor = 1.0);

/// ∫_0^∞ t^{x-1} e^{-t^k/p} dt
QuadratureResult integrate_pk_gamma(const EvalPoint& pt, const AccuracyPolicy& policy = AccuracyPolicy::oracle(),
                                    double truncation_factor = 1.0);

/// I_m(x, k) = ∫_0^∞ t^m e^{-xt} / (1 - e^{-kt}) dt > 0, m >= 1, so that
/// ψ_k^(m)(x) = (-1)^{m+1} I_m(x, k).
QuadratureResult integrate_k_polygamma(int m, const EvalPoint& pt,
                                       const AccuracyPolicy& policy = AccuracyPolicy::oracle(),
                                       double truncation_factor = 1.0);

/// The same integral for a real order s >= 1.
QuadratureResult integrate_k_polygamma_fractional(double s, const EvalPoint& pt,
                                                  const AccuracyPolicy& policy = AccuracyPolicy::oracle(),
                                                  double truncation_factor = 1.0);

/// ∫_0^∞ t^s / (e^{t^k/c} - 1) dt, requiring s - k > -1. With c = k this is
/// ζ_k(s+1) Γ_k(s+1); with c = p it is pζ_k(s+1) pΓ_k(s+1).
QuadratureResult integrate_bose(double s, double k, double c,
                                const AccuracyPolicy& policy = AccuracyPolicy::oracle(),
                                double truncation_factor = 1.0);

/// ∫_0^∞ t^{x-1} e^{-t^k/c} logⁿ t dt with c = p when use_p (pt.p required),
/// otherwise c = k. 0 <= n <= 8.
QuadratureResult integrate_k_gamma_deriv(int n, const EvalPoint& pt, bool use_p,
                                         const AccuracyPolicy& policy = AccuracyPolicy::oracle(),
                                         double truncation_factor = 1.0);

}  // namespace kgamma::oracle
