#include <cmath>

#include "doctest.h"
#include "kgamma/quadrature.hpp"
#include "support/reference.hpp"

using namespace kgamma;
using namespace kgamma::testing;

TEST_CASE("single panel integrates polynomials up to degree 31 exactly") {
  auto f = [](double t) { return std::pow(t, 20) - 3.0 * t + 1.0; };
  const auto p = quad::gauss_kronrod_21(f, 0.0, 1.0);
  CHECK(rel_err(p.value, 1.0 / 21.0 - 1.5 + 1.0) < 1e-15);
}

TEST_CASE("adaptive integration of smooth and endpoint-singular integrands") {
  const AccuracyPolicy policy = AccuracyPolicy::oracle();
  const std::vector<double> unit{0.0, 1.0};

  auto smooth = [](double t) { return std::exp(-t) * std::cos(3.0 * t); };
  const auto r1 = quad::integrate(smooth, unit, policy);
  const double want1 = (1.0 - std::exp(-1.0) * (std::cos(3.0) - 3.0 * std::sin(3.0))) / 10.0;
  CHECK(r1.converged);
  CHECK(std::abs(r1.value - want1) <= r1.error_estimate + 1e-15);

  // ∫_0^1 t^{-1/2} log² t dt = 16
  auto singular = [](double t) { return std::pow(t, -0.5) * std::log(t) * std::log(t); };
  const auto r2 = quad::integrate(singular, unit, policy);
  CHECK(r2.converged);
  CHECK(rel_err(r2.value, 16.0) < 1e-10);
  CHECK(std::abs(r2.value - 16.0) <= r2.error_estimate);
}

TEST_CASE("non-convergence is reported, never hidden") {
  AccuracyPolicy starved = AccuracyPolicy::oracle();
  starved.max_subdivisions = 2;
  auto wild = [](double t) { return std::sin(1.0 / t); };
  const std::vector<double> range{1e-4, 1.0};
  const auto r = quad::integrate(wild, range, starved);
  CHECK_FALSE(r.converged);
  CHECK(r.subdivisions_used == 2);
}

TEST_CASE("converged results honour their own error bound") {
  auto f = [](double t) { return 1.0 / (1.0 + t * t); };
  const std::vector<double> range{0.0, 10.0};
  for (double tol : {1e-6, 1e-9, 1e-12}) {
    AccuracyPolicy policy = AccuracyPolicy::oracle();
    policy.rel_tol = tol;
    const auto r = quad::integrate(f, range, policy);
    REQUIRE(r.converged);
    CHECK(r.error_estimate <= std::max(policy.abs_tol, tol * std::abs(r.value)));
    CHECK(std::abs(r.value - std::atan(10.0)) <= r.error_estimate + 1e-15);
  }
}

TEST_CASE("semi-infinite integration with an analytic tail bound") {
  // ∫_0^∞ t² e^{-t} dt = 2; tail ∫_T^∞ <= 2 T² e^{-T} for T >= 4.
  auto f = [](double t) { return t * t * std::exp(-t); };
  auto tail = [](double T) { return T < 4.0 ? INFINITY : 2.0 * T * T * std::exp(-T); };
  const auto r = quad::integrate_to_infinity(f, {0.0}, 5.0, tail, AccuracyPolicy::oracle());
  CHECK(r.converged);
  CHECK(rel_err(r.value, 2.0) < 1e-12);

  const auto doubled = quad::integrate_to_infinity(f, {0.0}, 5.0, tail, AccuracyPolicy::oracle(), 2.0);
  CHECK(std::abs(doubled.value - r.value) < 1e-12 * r.value);
}
