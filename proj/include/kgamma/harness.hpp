#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "kgamma/accuracy.hpp"
#include "kgamma/k_functions.hpp"

namespace kgamma::harness {

enum class TheoremId { T1, T2, T3, T4K, T4PK, T5, T6, T7 };

inline constexpr std::array<TheoremId, 8> kAllTheorems = {TheoremId::T1,  TheoremId::T2,   TheoremId::T3,
                                                         TheoremId::T4K, TheoremId::T4PK, TheoremId::T5,
                                                         TheoremId::T6,  TheoremId::T7};

std::string_view to_string(TheoremId id);
/// Accepts the names produced by to_string; throws std::invalid_argument.
TheoremId theorem_from_string(std::string_view name);

enum class Verdict { Pass, Fail, DirectionNegative };
std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view name);

/// Conjugate Hölder exponents, 1/p + 1/q = 1 with p, q > 1.
class HolderPair {
 public:
  /// q = p / (p - 1).
  static HolderPair from_p(double p);
  /// Throws std::invalid_argument unless both exceed 1 and are conjugate to
  /// within 1e-12.
  HolderPair(double p, double q);

  double p() const { return p_; }
  double q() const { return q_; }

 private:
  double p_, q_;
};

/// Parameters of one check; absent fields do not apply to the theorem.
struct CheckInputs {
  std::optional<double> x, k, p_param;
  std::optional<int> m, n, l;
  std::optional<double> holder_p, holder_q;

  bool operator==(const CheckInputs&) const = default;
};

struct InequalityCheck {
  TheoremId theorem;
  CheckInputs inputs;
  double lhs = 0.0;
  double rhs = 0.0;
  /// Oriented so that the proven direction predicts slack >= 0.
  double slack = 0.0;
  /// First-order propagated error bound on slack.
  double margin = 0.0;
  Verdict verdict = Verdict::Pass;
  /// slack / (Γ_k^(n))², Turán checks only.
  std::optional<double> normalized_slack;
};

struct HarnessPolicy {
  AccuracyPolicy accuracy = AccuracyPolicy::kernels();
  /// Absolute allowance on top of the propagated margin.
  double slack_tol = 1e-9;
};

/// Relative error assumed for one closed-form evaluation: 10 · rel_tol.
double operand_rel_error(const HarnessPolicy& policy);

/// m/p + n/q, snapped to the nearest integer when within 1e-9 of it.
double holder_order(int m, int n, const HolderPair& hp);

/// |ψ_k^(m)|^{1/p} |ψ_k^(n)|^{1/q} >= |ψ_k^(m/p + n/q)|. Magnitudes are used
/// on both sides because ψ_k^(m) is negative for even m.
InequalityCheck check_holder_polygamma(int m, int n, const HolderPair& hp, const EvalPoint& pt,
                                       const HarnessPolicy& policy = {});

/// ζ_k(m+1)^{1/p} ζ_k(n+1)^{1/q}
///   >= Γ_k(s+1) / (Γ_k(m+1)^{1/p} Γ_k(n+1)^{1/q}) · ζ_k(s+1),  s = m/p + n/q,
/// with pΓ_k and pζ_k when p_param is set.
InequalityCheck check_holder_zeta(int m, int n, const HolderPair& hp, double k, std::optional<double> p_param,
                                  const HarnessPolicy& policy = {});

/// Γ_k^(n-1) Γ_k^(n+1) - (Γ_k^(n))² >= 0 (pΓ_k when use_p), 1 <= n <= 7.
InequalityCheck check_turan_gamma_deriv(int n, const EvalPoint& pt, bool use_p, const HarnessPolicy& policy = {});

/// [Γ_k^(n-l) + Γ_k^(n+l)]/2 - Γ_k^(n) >= 0 for even n >= l >= 0, n + l <= 8.
/// The exponentiated statement is equivalent because exp is increasing.
InequalityCheck check_midpoint_gamma_deriv(int n, int l, const EvalPoint& pt, bool use_p,
                                           const HarnessPolicy& policy = {});

/// d = ψ_k^(n) - [ψ_k^(n+1) + ψ_k^(n-1)]/2, 2 <= n <= 11. lhs = ψ_k^(n),
/// rhs = the neighbour mean, so lhs - rhs is the raw d. The integral
/// representation gives d > 0 for odd n and d < 0 for even n; slack is d
/// oriented by that parity. A negative oriented slack beyond the margin is
/// reported as DIRECTION_NEGATIVE: the observed direction contradicts the
/// parity rule.
InequalityCheck check_midpoint_polygamma(int n, const EvalPoint& pt, const HarnessPolicy& policy = {});

/// Grid over every parameter any theorem uses. Each theorem reads only its
/// own axes and skips points that violate its hypotheses.
struct GridSpec {
  std::vector<double> x, k, p_param;
  std::vector<int> m, n, l;
  std::vector<double> holder_p;
  /// Orders for T7; when empty, n is used.
  std::vector<int> t7_n;
  /// T1 keeps only points where m/p + n/q is an integer.
  bool require_integral_order = true;

  /// Throws std::invalid_argument on non-positive x, k or p_param, orders
  /// below zero, or Hölder exponents not above 1.
  void validate() const;
  std::string describe() const;
};

/// x ∈ {0.5, 1, 2, 5, 10}, k ∈ {0.5, 1, 2, 3}, p ∈ {0.5, 1, 2, 5},
/// m, n ∈ {1, 2, 3, 4}, l ∈ {0, 2}, Hölder p ∈ {2, 3, 1.5}, and T7 orders
/// {2, 3, 4, 5}.
GridSpec default_grid();

/// Parses "a,b,c" or "min:max:count[:log]".
std::vector<double> parse_real_list(std::string_view text);
std::vector<int> parse_int_list(std::string_view text);

struct PointError {
  TheoremId theorem;
  CheckInputs inputs;
  std::string message;
};

struct TheoremSummary {
  std::size_t pass = 0, fail = 0, direction_negative = 0, errors = 0;
  std::optional<double> min_slack;
  /// First point (in grid order) attaining min_slack.
  std::optional<CheckInputs> min_location;

  std::size_t total() const { return pass + fail + direction_negative; }
};

struct ScanReport {
  std::vector<InequalityCheck> checks;
  std::vector<PointError> errors;
  std::vector<std::pair<TheoremId, TheoremSummary>> summary;  // in theorem order

  bool any_fail() const;
};

/// Every admissible point for every selected theorem, theorem by theorem in
/// TheoremId order, and within a theorem lexicographic in the grid indices
/// of its axes taken in the order x, k, p_param, m, n, l, holder_p.
/// Evaluation errors are collected in the report.
ScanReport scan_grid(const GridSpec& spec, const std::set<TheoremId>& theorems, const HarnessPolicy& policy = {});

}  // namespace kgamma::harness
