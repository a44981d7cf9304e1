#include "kgamma/harness.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "kgamma/errors.hpp"

namespace kgamma {

void AccuracyPolicy::validate() const {
  if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) throw std::invalid_argument("AccuracyPolicy: requires rel_tol > 0");
  if (!(abs_tol >= 0.0) || !std::isfinite(abs_tol)) throw std::invalid_argument("AccuracyPolicy: requires abs_tol >= 0");
  if (max_series_terms < 1 || max_subdivisions < 1) {
    throw std::invalid_argument("AccuracyPolicy: requires positive work budgets");
  }
}

namespace harness {

namespace {

constexpr double kRoundoff = 4.0 * std::numeric_limits<double>::epsilon();

std::string_view kTheoremNames[] = {"T1", "T2", "T3", "T4K", "T4PK", "T5", "T6", "T7"};

void finish(InequalityCheck& c, const HarnessPolicy& policy, bool direction_check = false) {
  c.margin += kRoundoff * (std::abs(c.lhs) + std::abs(c.rhs));
  if (c.slack >= -c.margin - policy.slack_tol) {
    c.verdict = Verdict::Pass;
  } else {
    c.verdict = direction_check ? Verdict::DirectionNegative : Verdict::Fail;
  }
}

void require_order(bool ok, const char* fn, const char* precondition) {
  if (!ok) detail::domain_fail(fn, precondition);
}

EvalPoint with_p(const EvalPoint& pt, bool use_p) {
  if (!use_p) return {pt.x, pt.k, pt.k};
  pt.validate_with_p();
  return pt;
}

CheckInputs point_inputs(const EvalPoint& pt, bool use_p) {
  CheckInputs in;
  in.x = pt.x;
  in.k = pt.k;
  if (use_p) in.p_param = pt.p;
  return in;
}

}  // namespace

std::string_view to_string(TheoremId id) { return kTheoremNames[static_cast<int>(id)]; }

TheoremId theorem_from_string(std::string_view name) {
  for (TheoremId id : kAllTheorems)
    if (to_string(id) == name) return id;
  throw std::invalid_argument("unknown theorem '" + std::string(name) + "'");
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::DirectionNegative: return "DIRECTION_NEGATIVE";
  }
  return "?";
}

Verdict verdict_from_string(std::string_view name) {
  for (Verdict v : {Verdict::Pass, Verdict::Fail, Verdict::DirectionNegative})
    if (to_string(v) == name) return v;
  throw std::invalid_argument("unknown verdict '" + std::string(name) + "'");
}

HolderPair HolderPair::from_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("HolderPair: requires p > 1");
  return HolderPair(p, p / (p - 1.0));
}

HolderPair::HolderPair(double p, double q) : p_(p), q_(q) {
  if (!(p > 1.0) || !(q > 1.0) || !std::isfinite(p) || !std::isfinite(q)) {
    throw std::invalid_argument("HolderPair: requires p > 1 and q > 1");
  }
  if (std::abs(1.0 / p + 1.0 / q - 1.0) > 1e-12) throw std::invalid_argument("HolderPair: requires 1/p + 1/q = 1");
}

double operand_rel_error(const HarnessPolicy& policy) { return 10.0 * policy.accuracy.rel_tol; }

double holder_order(int m, int n, const HolderPair& hp) {
  const double s = m / hp.p() + n / hp.q();
  const double r = std::round(s);
  return std::abs(s - r) <= 1e-9 ? r : s;
}

InequalityCheck check_holder_polygamma(int m, int n, const HolderPair& hp, const EvalPoint& pt,
                                       const HarnessPolicy& policy) {
  require_order(m >= 1 && n >= 1, "check_holder_polygamma", "m, n >= 1");
  const double s = holder_order(m, n, hp);
  require_order(s >= 1.0, "check_holder_polygamma", "m/p + n/q >= 1");
  const auto& acc = policy.accuracy;
  const EvalPoint base{pt.x, pt.k, {}};

  InequalityCheck c;
  c.theorem = TheoremId::T1;
  c.inputs = point_inputs(base, false);
  c.inputs.m = m;
  c.inputs.n = n;
  c.inputs.holder_p = hp.p();
  c.inputs.holder_q = hp.q();
  const double a = std::abs(k_polygamma(m, base, acc));
  const double b = std::abs(k_polygamma(n, base, acc));
  c.lhs = std::pow(a, 1.0 / hp.p()) * std::pow(b, 1.0 / hp.q());
  c.rhs = k_polygamma_magnitude_fractional(FractionalOrder(s), base, acc);
  c.slack = c.lhs - c.rhs;
  // Relative errors scale by the exponents, which sum to one on the left.
  const double eps = operand_rel_error(policy);
  c.margin = eps * (std::abs(c.lhs) + std::abs(c.rhs));
  finish(c, policy);
  return c;
}

InequalityCheck check_holder_zeta(int m, int n, const HolderPair& hp, double k, std::optional<double> p_param,
                                  const HarnessPolicy& policy) {
  require_order(m >= 1 && n >= 1, "check_holder_zeta", "m, n >= 1");
  if (!(k > 0.0) || !std::isfinite(k)) detail::domain_fail("check_holder_zeta", "k > 0");
  if (p_param && (!(*p_param > 0.0) || !std::isfinite(*p_param))) detail::domain_fail("check_holder_zeta", "p > 0");
  const double s = holder_order(m, n, hp);
  if (!(m + 1.0 > k) || !(n + 1.0 > k) || !(s + 1.0 > k)) {
    detail::domain_fail("check_holder_zeta", "m+1, n+1 and m/p + n/q + 1 all > k");
  }
  const auto& acc = policy.accuracy;
  const double c_param = p_param ? *p_param : k;
  auto zeta = [&](double x) { return p_param ? pk_zeta(x, k, c_param, acc) : k_zeta(x, k, acc); };
  auto gamma = [&](double x) { return p_param ? pk_gamma({x, k, c_param}, acc) : k_gamma({x, k, {}}, acc); };

  InequalityCheck c;
  c.theorem = p_param ? TheoremId::T3 : TheoremId::T2;
  c.inputs.k = k;
  c.inputs.p_param = p_param;
  c.inputs.m = m;
  c.inputs.n = n;
  c.inputs.holder_p = hp.p();
  c.inputs.holder_q = hp.q();
  const double ip = 1.0 / hp.p(), iq = 1.0 / hp.q();
  c.lhs = std::pow(zeta(m + 1.0), ip) * std::pow(zeta(n + 1.0), iq);
  const double ratio = gamma(s + 1.0) / (std::pow(gamma(m + 1.0), ip) * std::pow(gamma(n + 1.0), iq));
  c.rhs = ratio * zeta(s + 1.0);
  c.slack = c.lhs - c.rhs;
  // lhs: exponents sum to 1; rhs: 1 + 1/p + 1/q + 1 = 3.
  const double eps = operand_rel_error(policy);
  c.margin = eps * (std::abs(c.lhs) + 3.0 * std::abs(c.rhs));
  finish(c, policy);
  return c;
}

InequalityCheck check_turan_gamma_deriv(int n, const EvalPoint& pt, bool use_p, const HarnessPolicy& policy) {
  require_order(n >= 1 && n <= 7, "check_turan_gamma_deriv", "1 <= n <= 7");
  pt.validate();
  const auto d = pk_gamma_derivatives(n + 1, with_p(pt, use_p), policy.accuracy);

  InequalityCheck c;
  c.theorem = use_p ? TheoremId::T4PK : TheoremId::T4K;
  c.inputs = point_inputs(pt, use_p);
  c.inputs.n = n;
  c.lhs = d.value[n - 1] * d.value[n + 1];
  c.rhs = d.value[n] * d.value[n];
  c.slack = c.lhs - c.rhs;
  if (c.rhs > 0.0) c.normalized_slack = c.slack / c.rhs;
  const double eps = operand_rel_error(policy);
  auto err = [&](int j) { return eps * (j + 1) * d.scale[j]; };
  c.margin = std::abs(d.value[n + 1]) * err(n - 1) + std::abs(d.value[n - 1]) * err(n + 1) +
             2.0 * std::abs(d.value[n]) * err(n);
  finish(c, policy);
  return c;
}

InequalityCheck check_midpoint_gamma_deriv(int n, int l, const EvalPoint& pt, bool use_p,
                                           const HarnessPolicy& policy) {
  require_order(n % 2 == 0 && l % 2 == 0, "check_midpoint_gamma_deriv", "n and l even");
  require_order(n >= l && l >= 0, "check_midpoint_gamma_deriv", "n >= l >= 0");
  require_order(n + l <= kMaxDerivOrder, "check_midpoint_gamma_deriv", "n + l <= 8");
  pt.validate();
  const auto d = pk_gamma_derivatives(n + l, with_p(pt, use_p), policy.accuracy);

  InequalityCheck c;
  c.theorem = use_p ? TheoremId::T6 : TheoremId::T5;
  c.inputs = point_inputs(pt, use_p);
  c.inputs.n = n;
  c.inputs.l = l;
  c.lhs = 0.5 * (d.value[n - l] + d.value[n + l]);
  c.rhs = d.value[n];
  c.slack = c.lhs - c.rhs;
  const double eps = operand_rel_error(policy);
  auto err = [&](int j) { return eps * (j + 1) * d.scale[j]; };
  c.margin = 0.5 * (err(n - l) + err(n + l)) + err(n);
  finish(c, policy);
  return c;
}

InequalityCheck check_midpoint_polygamma(int n, const EvalPoint& pt, const HarnessPolicy& policy) {
  require_order(n >= 2 && n <= 11, "check_midpoint_polygamma", "2 <= n <= 11");
  const EvalPoint base{pt.x, pt.k, {}};
  const auto& acc = policy.accuracy;
  const double below = k_polygamma(n - 1, base, acc);
  const double mid = k_polygamma(n, base, acc);
  const double above = k_polygamma(n + 1, base, acc);

  InequalityCheck c;
  c.theorem = TheoremId::T7;
  c.inputs = point_inputs(base, false);
  c.inputs.n = n;
  c.lhs = mid;
  c.rhs = 0.5 * (above + below);
  const double d = c.lhs - c.rhs;
  c.slack = (n % 2 == 1) ? d : -d;
  const double eps = operand_rel_error(policy);
  c.margin = eps * (std::abs(mid) + 0.5 * (std::abs(above) + std::abs(below)));
  finish(c, policy, true);
  return c;
}

}  // namespace harness
}  // namespace kgamma
