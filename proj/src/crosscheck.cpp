#include "kgamma/crosscheck.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kgamma/format.hpp"
#include "kgamma/k_functions.hpp"
#include "kgamma/oracle.hpp"

namespace kgamma::crosscheck {

namespace {

struct Tally {
  FamilyResult result;

  void add(double closed, const QuadratureResult& q, const std::string& where) {
    ++result.points;
    if (!q.converged) ++result.unconverged;
    const double rel = std::abs(closed - q.value) / std::abs(closed);
    // A NaN discrepancy sticks as the worst value.
    if (std::isnan(result.max_rel_discrepancy)) return;
    if (std::isnan(rel) || rel > result.max_rel_discrepancy) {
      result.max_rel_discrepancy = rel;
      result.worst_point = where;
    }
  }
};

std::string at(double x, double k, const std::optional<double>& p = {}, const std::string& order = {}) {
  std::string s = "x=" + format_number(x) + " k=" + format_number(k);
  if (p) s += " p=" + format_number(*p);
  if (!order.empty()) s += " " + order;
  return s;
}

}  // namespace

const std::vector<std::string>& all_families() {
  static const std::vector<std::string> names = {"k_gamma", "pk_gamma",      "k_polygamma",   "k_zeta",
                                                 "pk_zeta", "k_gamma_deriv", "pk_gamma_deriv"};
  return names;
}

std::vector<FamilyResult> run(const harness::GridSpec& grid, const std::vector<std::string>& families,
                              const AccuracyPolicy& kp, const AccuracyPolicy& op) {
  grid.validate();
  kp.validate();
  op.validate();
  for (const auto& f : families)
    if (std::find(all_families().begin(), all_families().end(), f) == all_families().end()) {
      throw std::invalid_argument("unknown family '" + f + "'");
    }

  std::vector<FamilyResult> out;
  for (const auto& family : all_families()) {
    if (std::find(families.begin(), families.end(), family) == families.end()) continue;
    Tally t;
    t.result.family = family;
    for (double x : grid.x)
      for (double k : grid.k) {
        const EvalPoint pt{x, k, {}};
        if (family == "k_gamma") t.add(k_gamma(pt, kp), oracle::integrate_k_gamma(pt, op), at(x, k));
        if (family == "k_polygamma") {
          for (int m : grid.m) {
            if (m < 1 || m > 12) continue;
            t.add(std::abs(k_polygamma(m, pt, kp)), oracle::integrate_k_polygamma(m, pt, op),
                  at(x, k, {}, "m=" + std::to_string(m)));
          }
        }
        if (family == "k_zeta" && x > k) {
          t.add(k_zeta(x, k, kp) * k_gamma(pt, kp), oracle::integrate_bose(x - 1.0, k, k, op), at(x, k));
        }
        if (family == "k_gamma_deriv") {
          for (int n : grid.n) {
            if (n > kMaxDerivOrder) continue;
            t.add(k_gamma_deriv(n, pt, kp), oracle::integrate_k_gamma_deriv(n, pt, false, op),
                  at(x, k, {}, "n=" + std::to_string(n)));
          }
        }
        for (double p : grid.p_param) {
          const EvalPoint ppt{x, k, p};
          if (family == "pk_gamma") t.add(pk_gamma(ppt, kp), oracle::integrate_pk_gamma(ppt, op), at(x, k, p));
          if (family == "pk_zeta" && x > k) {
            t.add(pk_zeta(x, k, p, kp) * pk_gamma(ppt, kp), oracle::integrate_bose(x - 1.0, k, p, op), at(x, k, p));
          }
          if (family == "pk_gamma_deriv") {
            for (int n : grid.n) {
              if (n > kMaxDerivOrder) continue;
              t.add(pk_gamma_deriv(n, ppt, kp), oracle::integrate_k_gamma_deriv(n, ppt, true, op),
                    at(x, k, p, "n=" + std::to_string(n)));
            }
          }
        }
      }
    out.push_back(t.result);
  }
  return out;
}

}  // namespace kgamma::crosscheck
