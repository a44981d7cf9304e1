#include <cassert>

#include "kgamma/simd.hpp"

namespace kgamma::simd::scalar {

namespace {

double powi(double base, int e) {
  double result = 1.0;
  while (e != 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

}  // namespace

double power_sum(double a, int s, std::size_t first, std::size_t last) {
  double sum = 0.0;
  for (std::size_t n = last; n > first; --n) {
    const double r = 1.0 / (static_cast<double>(n - 1) + a);
    sum += powi(r, s);
  }
  return sum;
}

double dot(std::span<const double> u, std::span<const double> v) {
  assert(u.size() == v.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) sum += u[i] * v[i];
  return sum;
}

}  // namespace kgamma::simd::scalar
