#include "kgamma/kernels.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "kgamma/errors.hpp"
#include "kgamma/simd.hpp"

namespace kgamma::kernels {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kHalfLog2Pi = 0.91893853320467274178;

// B_{2j} / (2j (2j-1)), j = 1..8: Stirling series for ln Γ.
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,    -1.0 / 360.0,     1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0,  -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0};

// B_{2j} / (2j), j = 1..7: asymptotic series for ψ.
constexpr std::array<double, 7> kDigammaAsym = {
    1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0};

// B_2/2!, B_4/4!, B_6/6! and the first omitted coefficient |B_8|/8!.
constexpr std::array<double, 3> kEulerMaclaurin = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0};
constexpr double kEulerMaclaurinOmitted = 1.0 / 1209600.0;

constexpr double kStirlingThreshold = 10.0;
constexpr double kTaylorRadius = 0.3;
constexpr int kTaylorTerms = 40;

void require_positive_finite(double v, const char* fn, const char* precondition) {
  if (!(v > 0.0) || !std::isfinite(v)) detail::domain_fail(fn, precondition);
}

bool is_integer(double v) { return std::floor(v) == v; }

double stirling_log_gamma(double y) {
  const double inv = 1.0 / y;
  const double inv2 = inv * inv;
  double series = 0.0;
  for (std::size_t j = kStirling.size(); j-- > 0;) series = series * inv2 + kStirling[j];
  return (y - 0.5) * std::log(y) - y + kHalfLog2Pi + series * inv;
}

// ζ(j) for j = 2..kTaylorTerms+1, used by the Taylor expansion of ln Γ(1+z).
const std::array<double, kTaylorTerms + 2>& zeta_integers() {
  static const auto table = [] {
    std::array<double, kTaylorTerms + 2> z{};
    for (int j = 2; j < kTaylorTerms + 2; ++j) z[j] = riemann_zeta(static_cast<double>(j));
    return z;
  }();
  return table;
}

// ln Γ(1+z) = -γ z + Σ_{j>=2} (-1)^j ζ(j) z^j / j for |z| <= kTaylorRadius.
double log_gamma_taylor(double z) {
  const auto& zeta = zeta_integers();
  double sum = 0.0;
  for (int j = kTaylorTerms + 1; j >= 2; --j) {
    const double c = ((j & 1) ? -zeta[j] : zeta[j]) / j;
    sum = (sum + c) * z;
  }
  sum *= z;
  return sum - kEulerGamma * z;
}

}  // namespace

double log_gamma(double y, const AccuracyPolicy& /*policy*/) {
  require_positive_finite(y, "log_gamma", "y > 0");
  if (y == 1.0 || y == 2.0) return 0.0;
  if (std::abs(y - 1.0) <= kTaylorRadius) return log_gamma_taylor(y - 1.0);
  if (std::abs(y - 2.0) <= kTaylorRadius) return std::log1p(y - 2.0) + log_gamma_taylor(y - 2.0);
  if (y >= kStirlingThreshold) return stirling_log_gamma(y);
  // Shift upward: Γ(y) = Γ(y+N) / (y (y+1) ... (y+N-1)).
  double product = 1.0;
  double shifted = y;
  while (shifted < kStirlingThreshold) {
    product *= shifted;
    shifted += 1.0;
  }
  return stirling_log_gamma(shifted) - std::log(product);
}

double gamma(double y, const AccuracyPolicy& policy) {
  require_positive_finite(y, "gamma", "y > 0");
  if (is_integer(y) && y <= 23.0) {
    double f = 1.0;
    for (double i = 2.0; i < y; i += 1.0) f *= i;
    return f;
  }
  const double lg = log_gamma(y, policy);
  if (lg > std::log(std::numeric_limits<double>::max())) {
    throw OverflowError("gamma: Γ(" + std::to_string(y) + ") exceeds the double range");
  }
  return std::exp(lg);
}

double digamma(double y) {
  require_positive_finite(y, "digamma", "y > 0");
  double shift = 0.0;
  while (y < kStirlingThreshold) {
    shift += 1.0 / y;
    y += 1.0;
  }
  const double inv2 = 1.0 / (y * y);
  double series = 0.0;
  for (std::size_t j = kDigammaAsym.size(); j-- > 0;) series = series * inv2 + kDigammaAsym[j];
  return std::log(y) - 0.5 / y - series * inv2 - shift;
}

std::size_t hurwitz_block_size(double s, double a, const AccuracyPolicy& policy) {
  // Lower bound on the sum: max(first term, ∫_a^∞ x^{-s} dx).
  const double log_lead = -s * std::log(a);
  const double log_integral = (1.0 - s) * std::log(a) - std::log(s - 1.0);
  const double log_sum_lb = std::max(log_lead, log_integral);
  // First omitted term: |B_8|/8! · s(s+1)...(s+6) · (N+a)^{-s-7}, doubled.
  double rising = 1.0;
  for (int i = 0; i < 7; ++i) rising *= s + i;
  const double log_c = std::log(2.0 * kEulerMaclaurinOmitted * rising);
  const double log_target = std::log(1e-3 * policy.rel_tol) + log_sum_lb;
  const double threshold = std::exp((log_c - log_target) / (s + 7.0));
  const double n = std::ceil(threshold - a);
  if (!(n > 0.0)) return 0;
  if (n > static_cast<double>(policy.max_series_terms)) {
    throw OverflowError("hurwitz_zeta: series budget exhausted (s too close to 1)");
  }
  return static_cast<std::size_t>(n);
}

double hurwitz_zeta(double s, double a, const AccuracyPolicy& policy) {
  if (!(s > 1.0) || !std::isfinite(s)) detail::domain_fail("hurwitz_zeta", "s > 1");
  require_positive_finite(a, "hurwitz_zeta", "a > 0");
  const std::size_t block = hurwitz_block_size(s, a, policy);
  const double b = static_cast<double>(block) + a;

  // Euler-Maclaurin tail: ∫_b^∞ + f(b)/2 + Σ_j B_{2j}/(2j)! (-f^{(2j-1)}(b)).
  const double fb = std::pow(b, -s);
  double tail = 0.0;
  double rising = s;  // s (s+1) ... (s+2j-2)
  double power = fb / b;  // b^{-s-2j+1}
  const double inv_b2 = 1.0 / (b * b);
  double corrections = 0.0;
  for (std::size_t j = 0; j < kEulerMaclaurin.size(); ++j) {
    corrections += kEulerMaclaurin[j] * rising * power;
    rising *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
    power *= inv_b2;
  }
  tail = corrections + 0.5 * fb + fb * b / (s - 1.0);

  // Small terms first; the leading a^{-s} goes in last.
  if (block == 0) return tail;
  double body;
  if (is_integer(s) && s <= 64.0) {
    body = simd::power_sum(a, static_cast<int>(s), 1, block);
  } else {
    body = 0.0;
    for (std::size_t n = block - 1; n >= 1; --n) body += std::pow(static_cast<double>(n) + a, -s);
  }
  return (tail + body) + std::pow(a, -s);
}

double riemann_zeta(double s, const AccuracyPolicy& policy) {
  if (!(s > 1.0) || !std::isfinite(s)) detail::domain_fail("riemann_zeta", "s > 1");
  return hurwitz_zeta(s, 1.0, policy);
}

double polygamma(int m, double y, const AccuracyPolicy& policy) {
  require_positive_finite(y, "polygamma", "y > 0");
  if (m < 0) detail::domain_fail("polygamma", "m >= 0");
  if (m > kMaxPolygammaOrder) {
    throw UnsupportedOrder("polygamma: order m = " + std::to_string(m) + " exceeds the cap m <= 12");
  }
  if (m == 0) return digamma(y);
  double factorial = 1.0;
  for (int i = 2; i <= m; ++i) factorial *= i;
  const double sign = (m % 2 == 1) ? 1.0 : -1.0;
  return sign * factorial * hurwitz_zeta(m + 1.0, y, policy);
}

GammaDerivatives gamma_derivatives(int n_max, double y, const AccuracyPolicy& policy) {
  require_positive_finite(y, "gamma_deriv_sequence", "y > 0");
  if (n_max < 0) detail::domain_fail("gamma_deriv_sequence", "n_max >= 0");
  if (n_max > kMaxGammaDerivOrder) {
    throw UnsupportedOrder("gamma_deriv_sequence: order " + std::to_string(n_max) +
                           " exceeds the cap n <= 8");
  }
  std::array<double, kMaxGammaDerivOrder> psi{};
  for (int j = 0; j < n_max; ++j) psi[j] = polygamma(j, y, policy);

  GammaDerivatives out;
  out.value.assign(n_max + 1, 0.0);
  out.scale.assign(n_max + 1, 0.0);
  out.value[0] = gamma(y, policy);
  out.scale[0] = out.value[0];
  for (int j = 0; j < n_max; ++j) {
    // Γ^{(j+1)} = Σ_i C(j,i) Γ^{(i)} ψ^{(j-i)}
    double binom = 1.0;
    double sum = 0.0, scale = 0.0;
    for (int i = 0; i <= j; ++i) {
      sum += binom * out.value[i] * psi[j - i];
      scale += binom * out.scale[i] * std::abs(psi[j - i]);
      binom = binom * (j - i) / (i + 1);
    }
    if (!std::isfinite(sum) || !std::isfinite(scale)) {
      throw OverflowError("gamma_deriv_sequence: Γ^(" + std::to_string(j + 1) + ") overflows");
    }
    out.value[j + 1] = sum;
    out.scale[j + 1] = scale;
  }
  return out;
}

}  // namespace kgamma::kernels
