#pragma once

#include <vector>

#include "kgamma/accuracy.hpp"

// Classical special-function building blocks. Every generalized function in
// k_functions.hpp reduces to these.
namespace kgamma::kernels {

inline constexpr int kMaxPolygammaOrder = 12;
inline constexpr int kMaxGammaDerivOrder = 8;

/// ln Γ(y) for y > 0. Absolute error below 1e-14 near the zeros at y = 1, 2
/// and relative error below 1e-12 elsewhere on [1e-3, 1e3].
double log_gamma(double y, const AccuracyPolicy& policy = AccuracyPolicy::kernels());

/// Γ(y) for y > 0. Exact for integer y <= 23; throws OverflowError past the
/// double range.
double gamma(double y, const AccuracyPolicy& policy = AccuracyPolicy::kernels());

/// ψ(y), the logarithmic derivative of Γ.
double digamma(double y);

/// ψ^(m)(y) for 0 <= m <= 12. m = 0 is the digamma function; for m >= 1 this
/// is (-1)^{m+1} m! ζ_H(m+1, y).
double polygamma(int m, double y, const AccuracyPolicy& policy = AccuracyPolicy::kernels());

/// ζ(s) for s > 1.
double riemann_zeta(double s, const AccuracyPolicy& policy = AccuracyPolicy::kernels());

/// ζ_H(s, a) = Σ_{n>=0} (n + a)^{-s} for s > 1, a > 0.
///
/// A direct block Σ_{n<N} is summed and the remainder replaced by its
/// Euler-Maclaurin expansion through the B_6 term. N is the smallest count
/// for which the first omitted (B_8) term, doubled, is below
/// 1e-3 * rel_tol times a lower bound of the sum. Because every derivative
/// of x^{-s} has fixed sign, the true remainder is bounded by that term.
double hurwitz_zeta(double s, double a, const AccuracyPolicy& policy = AccuracyPolicy::kernels());

/// Number of directly summed terms hurwitz_zeta uses for (s, a).
std::size_t hurwitz_block_size(double s, double a, const AccuracyPolicy& policy = AccuracyPolicy::kernels());

struct GammaDerivatives {
  /// value[j] = Γ^(j)(y)
  std::vector<double> value;
  /// scale[j] is the sum of absolute values of the terms that produced
  /// value[j]. Relative accuracy holds against scale, not value, when the
  /// recurrence cancels.
  std::vector<double> scale;
};

/// [Γ(y), Γ'(y), ..., Γ^(n_max)(y)] by Γ^(j+1) = Σ_i C(j,i) Γ^(i) ψ^(j-i).
GammaDerivatives gamma_derivatives(int n_max, double y,
                                   const AccuracyPolicy& policy = AccuracyPolicy::kernels());

inline std::vector<double> gamma_deriv_sequence(int n_max, double y,
                                                const AccuracyPolicy& policy = AccuracyPolicy::kernels()) {
  return gamma_derivatives(n_max, y, policy).value;
}

}  // namespace kgamma::kernels
