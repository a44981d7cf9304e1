#pragma once

#include <optional>
#include <vector>

#include "kgamma/accuracy.hpp"

namespace kgamma {

/// Argument x > 0 with deformation k > 0 and, for the p-k family, p > 0.
struct EvalPoint {
  double x;
  double k;
  std::optional<double> p;

  /// Throws DomainError naming the first violated condition.
  void validate() const;
  /// As validate(), and additionally requires p to be present.
  void validate_with_p() const;
};

/// Real polygamma order s >= 1 for the integral extension of ψ_k^(s).
class FractionalOrder {
 public:
  explicit FractionalOrder(double s);
  double value() const { return s_; }

 private:
  double s_;
};

/// Γ_k(x) = k^{x/k-1} Γ(x/k).
double k_gamma(const EvalPoint& pt, const AccuracyPolicy& policy = AccuracyPolicy::kernels());

/// pΓ_k(x) = p^{x/k} Γ(x/k) / k. k_gamma is the p = k case of the same
/// expression, so pk_gamma(x, k, k) and k_gamma(x, k) are bit-identical.
double pk_gamma(const EvalPoint& pt, const AccuracyPolicy& policy = AccuracyPolicy::kernels());

/// ψ_k^(m)(x) = (-1)^{m+1} m! Σ_n (nk + x)^{-(m+1)}
///            = (-1)^{m+1} m! k^{-(m+1)} ζ_H(m+1, x/k),   1 <= m <= 12.
double k_polygamma(int m, const EvalPoint& pt, const AccuracyPolicy& policy = AccuracyPolicy::kernels());

/// ∫_0^∞ t^s e^{-xt} / (1 - e^{-kt}) dt = Γ(s+1) k^{-(s+1)} ζ_H(s+1, x/k).
/// Equals |ψ_k^(s)(x)| when s is an integer.
double k_polygamma_magnitude_fractional(FractionalOrder s, const EvalPoint& pt,
                                        const AccuracyPolicy& policy = AccuracyPolicy::kernels());

/// ζ_k(x) = ζ(x/k), x/k > 1.
double k_zeta(double x, double k, const AccuracyPolicy& policy = AccuracyPolicy::kernels());

/// pζ_k(x). The Bose integral divided by pΓ_k(x) loses all dependence on p,
/// so this is ζ(x/k) for every p > 0.
double pk_zeta(double x, double k, double p, const AccuracyPolicy& policy = AccuracyPolicy::kernels());

inline constexpr int kMaxDerivOrder = 8;

/// Derivatives of pΓ_k at one point together with per-order error scales.
struct KGammaDerivatives {
  std::vector<double> value;  // value[n] = d^n/dx^n pΓ_k(x)
  std::vector<double> scale;  // sum of |Leibniz terms| behind value[n]
};

/// Orders 0..n_max of pΓ_k at pt (pt.p must be set), by Leibniz expansion of
/// (p^{x/k}/k) · Γ(x/k):
///   Σ_j C(n,j) (ln p / k)^{n-j} k^{-j} (p^{x/k}/k) Γ^(j)(x/k).
KGammaDerivatives pk_gamma_derivatives(int n_max, const EvalPoint& pt,
                                       const AccuracyPolicy& policy = AccuracyPolicy::kernels());

/// Γ_k^(n)(x), 0 <= n <= 8.
double k_gamma_deriv(int n, const EvalPoint& pt, const AccuracyPolicy& policy = AccuracyPolicy::kernels());

/// pΓ_k^(n)(x), 0 <= n <= 8.
double pk_gamma_deriv(int n, const EvalPoint& pt, const AccuracyPolicy& policy = AccuracyPolicy::kernels());

}  // namespace kgamma
