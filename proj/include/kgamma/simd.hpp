#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Data-parallel inner loops. Each kernel has a scalar reference and, where
// the target supports it, an AVX2 variant. The variant is chosen once per
// process from CPUID; setting KGAMMA_SIMD=scalar forces the reference path.
namespace kgamma::simd {

enum class Isa { Scalar, Avx2 };

Isa active_isa();
std::string_view isa_name(Isa isa);

/// True when the AVX2 variants were compiled in and the CPU supports them.
bool avx2_available();

/// Σ_{n=first}^{last-1} (n + a)^{-s} for integer s >= 1, a > 0, summed from
/// the largest n downward. Each term is 1/(n+a) raised by binary
/// exponentiation, so scalar and vector terms are bit-identical; only the
/// accumulation order differs.
double power_sum(double a, int s, std::size_t first, std::size_t last);

/// Σ u[i] v[i]; u and v must have equal length.
double dot(std::span<const double> u, std::span<const double> v);

namespace scalar {
double power_sum(double a, int s, std::size_t first, std::size_t last);
double dot(std::span<const double> u, std::span<const double> v);
}  // namespace scalar

#if defined(KGAMMA_HAVE_AVX2)
namespace avx2 {
double power_sum(double a, int s, std::size_t first, std::size_t last);
double dot(std::span<const double> u, std::span<const double> v);
}  // namespace avx2
#endif

}  // namespace kgamma::simd
