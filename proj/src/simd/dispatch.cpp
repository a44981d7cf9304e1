#include <cstdlib>
#include <string_view>

#include "kgamma/simd.hpp"

namespace kgamma::simd {

namespace {

struct Table {
  Isa isa;
  double (*power_sum)(double, int, std::size_t, std::size_t);
  double (*dot)(std::span<const double>, std::span<const double>);
};

Table select() {
  const char* env = std::getenv("KGAMMA_SIMD");
  const bool force_scalar = env != nullptr && std::string_view(env) == "scalar";
#if defined(KGAMMA_HAVE_AVX2)
  if (!force_scalar && avx2_available()) return {Isa::Avx2, &avx2::power_sum, &avx2::dot};
#else
  (void)force_scalar;
#endif
  return {Isa::Scalar, &scalar::power_sum, &scalar::dot};
}

const Table& table() {
  static const Table t = select();
  return t;
}

}  // namespace

bool avx2_available() {
#if defined(KGAMMA_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() { return table().isa; }

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

double power_sum(double a, int s, std::size_t first, std::size_t last) {
  if (last <= first) return 0.0;
  return table().power_sum(a, s, first, last);
}

double dot(std::span<const double> u, std::span<const double> v) { return table().dot(u, v); }

}  // namespace kgamma::simd
