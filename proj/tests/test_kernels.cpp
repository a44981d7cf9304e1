#include <cmath>
#include <random>

#include "doctest.h"
#include "kgamma/errors.hpp"
#include "kgamma/kernels.hpp"
#include "support/reference.hpp"

using namespace kgamma;
using namespace kgamma::testing;
namespace kk = kgamma::kernels;

TEST_CASE("log_gamma reference values") {
  CHECK(kk::log_gamma(1.0) == 0.0);
  CHECK(kk::log_gamma(2.0) == 0.0);
  CHECK(rel_err(kk::log_gamma(5.0), std::log(24.0)) < 1e-15);
  CHECK(rel_err(kk::log_gamma(0.5), kLogGammaHalf) < 1e-14);
  CHECK(rel_err(kk::log_gamma(0.5), 0.5 * std::log(kPi)) < 1e-14);
  CHECK(rel_err(kk::log_gamma(1e-3), kLogGamma1e3) < 1e-13);
  CHECK(rel_err(kk::log_gamma(1000.0), kLogGamma1000) < 1e-14);
  CHECK(rel_err(kk::log_gamma(1.0001), kLogGamma1p0001) < 1e-12);
}

TEST_CASE("log_gamma matches std::lgamma across [1e-3, 1e3]") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> log_y(std::log(1e-3), std::log(1e3));
  for (int i = 0; i < 2000; ++i) {
    const double y = std::exp(log_y(rng));
    const double want = std::lgamma(y);
    // Absolute near the zeros of ln Γ, relative elsewhere.
    CHECK(std::abs(kk::log_gamma(y) - want) <= 1e-12 * std::max(std::abs(want), 1.0));
  }
}

TEST_CASE("log_gamma domain errors") {
  CHECK_THROWS_AS(kk::log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(kk::log_gamma(-1.5), DomainError);
  CHECK_THROWS_AS(kk::log_gamma(std::nan("")), DomainError);
  CHECK_THROWS_AS(kk::log_gamma(INFINITY), DomainError);
}

TEST_CASE("gamma is exact on small integers and overflows loudly") {
  CHECK(kk::gamma(5.0) == 24.0);
  CHECK(kk::gamma(1.0) == 1.0);
  CHECK(kk::gamma(20.0) == 121645100408832000.0);
  CHECK(rel_err(kk::gamma(0.5), std::sqrt(kPi)) < 1e-14);
  CHECK_THROWS_AS(kk::gamma(200.0), OverflowError);
}

TEST_CASE("property: Γ(y+1) = y Γ(y) on [0.5, 10]") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(0.5, 10.0);
  for (int i = 0; i < 500; ++i) {
    const double y = dist(rng);
    const double next = std::exp(kk::log_gamma(y + 1.0));
    CHECK(std::abs(next - y * std::exp(kk::log_gamma(y))) <= 10 * 1e-12 * next);
  }
}

TEST_CASE("polygamma reference values") {
  const double gamma_bf = euler_gamma_bruteforce();
  CHECK(rel_err(gamma_bf, kEulerGamma) < 1e-14);
  CHECK(rel_err(kk::polygamma(0, 1.0), -gamma_bf) < 1e-14);
  CHECK(rel_err(kk::polygamma(1, 1.0), kPi * kPi / 6.0) < 1e-14);
  CHECK(rel_err(kk::polygamma(0, 2.0), 1.0 - gamma_bf) < 1e-14);
  CHECK(rel_err(kk::polygamma(2, 1.0), -kTwoZeta3) < 1e-14);
  CHECK(rel_err(kk::polygamma(3, 1.0), std::pow(kPi, 4) / 15.0) < 1e-14);
}

TEST_CASE("polygamma order cap and domain") {
  CHECK_NOTHROW(kk::polygamma(12, 1.0));
  CHECK_THROWS_AS(kk::polygamma(13, 1.0), UnsupportedOrder);
  CHECK_THROWS_AS(kk::polygamma(-1, 1.0), DomainError);
  CHECK_THROWS_AS(kk::polygamma(1, 0.0), DomainError);
}

TEST_CASE("property: polygamma recurrence and sign pattern") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> dist(0.5, 10.0);
  for (int i = 0; i < 200; ++i) {
    const double y = dist(rng);
    double factorial = 1.0;
    for (int m = 0; m <= 6; ++m) {
      if (m > 0) factorial *= m;
      const double lhs = kk::polygamma(m, y + 1.0) - kk::polygamma(m, y);
      const double rhs = ((m % 2 == 0) ? 1.0 : -1.0) * factorial * std::pow(y, -(m + 1.0));
      CHECK(std::abs(lhs - rhs) <= 10 * 1e-12 * std::abs(rhs) + 1e-15 * std::abs(kk::polygamma(m, y)));
      if (m >= 1) CHECK(std::signbit(kk::polygamma(m, y)) == (m % 2 == 0));
    }
  }
}

TEST_CASE("riemann_zeta reference values") {
  CHECK(rel_err(kk::riemann_zeta(2.0), kPi * kPi / 6.0) < 1e-14);
  CHECK(rel_err(kk::riemann_zeta(4.0), std::pow(kPi, 4) / 90.0) < 1e-14);
  CHECK(rel_err(kk::riemann_zeta(2.5), kZeta2_5) < 1e-14);
  CHECK(rel_err(kk::riemann_zeta(2.5), hurwitz_bruteforce(2.5, 1.0)) < 1e-13);
  CHECK(std::abs(kk::riemann_zeta(40.0) - 1.0 - std::ldexp(1.0, -40)) < 2 * std::pow(3.0, -40));
  CHECK_THROWS_AS(kk::riemann_zeta(1.0), DomainError);
  CHECK_THROWS_AS(kk::riemann_zeta(0.5), DomainError);
}

TEST_CASE("hurwitz_zeta reference values") {
  for (double s : {2.0, 3.0, 4.0}) CHECK(kk::hurwitz_zeta(s, 1.0) == kk::riemann_zeta(s));
  CHECK(rel_err(kk::hurwitz_zeta(2.0, 0.5), kPi * kPi / 2.0) < 1e-14);
  CHECK(rel_err(kk::hurwitz_zeta(3.0, 1.7), kHurwitz3_1_7) < 1e-14);
  CHECK(rel_err(kk::hurwitz_zeta(13.0, 0.1), kHurwitz13_0_1) < 1e-14);
  CHECK(rel_err(kk::hurwitz_zeta(1.01, 3.0), kHurwitz1_01_3) < 1e-13);
  CHECK(rel_err(kk::hurwitz_zeta(3.0, 1.7), hurwitz_bruteforce(3.0, 1.7)) < 1e-13);
  CHECK(rel_err(kk::hurwitz_zeta(2.0, 0.5), hurwitz_bruteforce(2.0, 0.5)) < 1e-12);
  const double shifted = kk::hurwitz_zeta(3.0, 2.7);
  CHECK(rel_err(shifted, kk::hurwitz_zeta(3.0, 1.7) - std::pow(1.7, -3.0)) < 1e-14);
}

TEST_CASE("hurwitz_zeta domain errors") {
  CHECK_THROWS_AS(kk::hurwitz_zeta(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(kk::hurwitz_zeta(2.0, 0.0), DomainError);
  CHECK_THROWS_AS(kk::hurwitz_zeta(2.0, -1.0), DomainError);
}

TEST_CASE("hurwitz block size follows the remainder bound") {
  // Large offsets need no direct terms; small offsets and large s need a few.
  CHECK(kk::hurwitz_block_size(2.0, 1000.0) == 0);
  CHECK(kk::hurwitz_block_size(2.0, 1.0) > 0);
  AccuracyPolicy loose;
  loose.rel_tol = 1e-4;
  CHECK(kk::hurwitz_block_size(2.0, 1.0, loose) < kk::hurwitz_block_size(2.0, 1.0));
}

TEST_CASE("property: hurwitz shift identity on 100 random points") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> sd(1.1, 14.0), ad(0.05, 50.0);
  for (int i = 0; i < 100; ++i) {
    const double s = sd(rng), a = ad(rng);
    const double lhs = kk::hurwitz_zeta(s, a + 1.0);
    const double rhs = kk::hurwitz_zeta(s, a) - std::pow(a, -s);
    // The subtraction cancels when a^{-s} dominates the sum.
    const double scale = kk::hurwitz_zeta(s, a);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
  }
}

TEST_CASE("kernels are deterministic") {
  CHECK(kk::hurwitz_zeta(2.37, 0.61) == kk::hurwitz_zeta(2.37, 0.61));
  CHECK(kk::log_gamma(3.3) == kk::log_gamma(3.3));
}

TEST_CASE("gamma_deriv_sequence reference values") {
  const auto zeroth = kk::gamma_deriv_sequence(0, 2.5);
  REQUIRE(zeroth.size() == 1);
  CHECK(zeroth[0] == kk::gamma(2.5));

  const auto at1 = kk::gamma_deriv_sequence(8, 1.0);
  const double g = kEulerGamma;
  CHECK(rel_err(at1[1], -g) < 1e-14);
  CHECK(rel_err(at1[2], g * g + kPi * kPi / 6.0) < 1e-14);
  for (int j = 0; j <= 8; ++j) CHECK(rel_err(at1[j], kGammaDerivAt1[j]) <= 10 * 1e-12 * (j + 1));

  const auto at_quarter = kk::gamma_deriv_sequence(8, 0.25);
  for (int j = 0; j <= 8; ++j) CHECK(rel_err(at_quarter[j], kGammaDerivAtQuarter[j]) <= 10 * 1e-12 * (j + 1));
}

TEST_CASE("gamma_deriv_sequence order cap and overflow") {
  CHECK_THROWS_AS(kk::gamma_deriv_sequence(9, 1.0), UnsupportedOrder);
  CHECK_THROWS_AS(kk::gamma_deriv_sequence(2, 0.0), DomainError);
  CHECK_THROWS_AS(kk::gamma_deriv_sequence(2, 180.0), OverflowError);
}

TEST_CASE("property: Γ' agrees with central differences of exp(log_gamma) on [1, 5]") {
  const auto gamma_fn = [](double y) { return std::exp(kk::log_gamma(y)); };
  for (double y = 1.0; y <= 5.0; y += 0.25) {
    const double fd = central_difference(gamma_fn, y, 1e-5);
    const double exact = kk::gamma_deriv_sequence(1, y)[1];
    // Γ' vanishes near 1.4616; compare against the Γψ scale there.
    CHECK(std::abs(fd - exact) <= 1e-6 * std::max(std::abs(exact), kk::gamma(y)));
  }
}
