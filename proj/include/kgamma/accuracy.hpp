#pragma once

#include <cstddef>

namespace kgamma {

/// Tolerances and work budgets shared by every numerical routine.
struct AccuracyPolicy {
  double rel_tol = 1e-12;
  double abs_tol = 1e-300;
  std::size_t max_series_terms = 100000;
  std::size_t max_subdivisions = 4000;

  /// Throws std::invalid_argument unless rel_tol > 0, abs_tol >= 0 and both
  /// budgets are at least one.
  void validate() const;

  /// Defaults for the closed-form kernels.
  static AccuracyPolicy kernels() { return {}; }

  /// Defaults for the quadrature oracle: slightly looser relative target,
  /// generous subdivision budget.
  static AccuracyPolicy oracle() { return {1e-12, 1e-300, 100000, 20000}; }
};

}  // namespace kgamma
