#pragma once

#include <string>
#include <vector>

#include "kgamma/accuracy.hpp"
#include "kgamma/harness.hpp"

namespace kgamma::crosscheck {

/// Closed form against quadrature, family by family:
///   k_gamma, pk_gamma        over x, k (, p)
///   k_polygamma              over x, k, m
///   k_zeta, pk_zeta          ζ·Γ products against the Bose integral at
///                            s = x - 1, c = k or p, for x > k
///   k_gamma_deriv, pk_gamma_deriv over x, k (, p), n
const std::vector<std::string>& all_families();

struct FamilyResult {
  std::string family;
  std::size_t points = 0;
  /// max |closed - oracle| / |closed|
  double max_rel_discrepancy = 0.0;
  std::string worst_point;
  std::size_t unconverged = 0;
};

/// Throws std::invalid_argument for an unknown family or an invalid grid.
std::vector<FamilyResult> run(const harness::GridSpec& grid, const std::vector<std::string>& families,
                              const AccuracyPolicy& kernel_policy = AccuracyPolicy::kernels(),
                              const AccuracyPolicy& oracle_policy = AccuracyPolicy::oracle());

}  // namespace kgamma::crosscheck
