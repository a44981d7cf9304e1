#include <immintrin.h>

#include <cassert>

#include "kgamma/simd.hpp"

namespace kgamma::simd::avx2 {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

// Same multiplication sequence as the scalar powi.
inline __m256d powi(__m256d base, int e) {
  __m256d result = _mm256_set1_pd(1.0);
  while (e != 0) {
    if (e & 1) result = _mm256_mul_pd(result, base);
    base = _mm256_mul_pd(base, base);
    e >>= 1;
  }
  return result;
}

}  // namespace

double power_sum(double a, int s, std::size_t first, std::size_t last) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d av = _mm256_set1_pd(a);
  __m256d acc = _mm256_setzero_pd();
  std::size_t n = last;
  // Lanes hold n-1 .. n-4 so the block walks downward like the scalar loop.
  while (n >= first + 4) {
    const double top = static_cast<double>(n - 1);
    const __m256d idx = _mm256_set_pd(top - 3.0, top - 2.0, top - 1.0, top);
    const __m256d r = _mm256_div_pd(one, _mm256_add_pd(idx, av));
    acc = _mm256_add_pd(acc, powi(r, s));
    n -= 4;
  }
  double sum = hsum(acc);
  for (; n > first; --n) {
    const double r = 1.0 / (static_cast<double>(n - 1) + a);
    double term = 1.0, base = r;
    for (int e = s; e != 0; e >>= 1) {
      if (e & 1) term *= base;
      base *= base;
    }
    sum += term;
  }
  return sum;
}

double dot(std::span<const double> u, std::span<const double> v) {
  assert(u.size() == v.size());
  const std::size_t n = u.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(u.data() + i), _mm256_loadu_pd(v.data() + i)));
  }
  double sum = hsum(acc);
  for (; i < n; ++i) sum += u[i] * v[i];
  return sum;
}

}  // namespace kgamma::simd::avx2
