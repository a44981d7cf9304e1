// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// criteria that failed unexpectedly; see README for the one known failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "kgamma/crosscheck.hpp"
#include "kgamma/cli.hpp"
#include "kgamma/harness.hpp"
#include "kgamma/k_functions.hpp"
#include "kgamma/kernels.hpp"
#include "kgamma/oracle.hpp"
#include "support/reference.hpp"

using namespace kgamma;
using namespace kgamma::harness;
using namespace kgamma::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  // Set when the failure is the documented even-n Turán counterexample.
  bool known_failure = false;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

ScanReport scan(std::set<TheoremId> ids, const std::function<void(GridSpec&)>& adjust = {}) {
  GridSpec g = default_grid();
  if (adjust) adjust(g);
  return scan_grid(g, ids);
}

// slack >= -(margin + 1e-9) everywhere, no evaluation errors.
std::size_t count_below(const ScanReport& r, double extra, std::string& worst) {
  std::size_t bad = 0;
  double worst_excess = 0.0;
  for (const auto& c : r.checks) {
    const double excess = -(c.slack + c.margin + extra);
    if (excess > 0.0) {
      ++bad;
      if (excess > worst_excess) {
        worst_excess = excess;
        worst = std::string(to_string(c.theorem)) + " slack=" + fmt("%.6g", c.slack);
      }
    }
  }
  return bad;
}

Outcome classical_reductions() {
  const auto t0 = std::chrono::steady_clock::now();
  const double zeta[] = {0.0, 0.0, kPi * kPi / 6.0, kZeta3, std::pow(kPi, 4) / 90.0, kZeta5};
  std::vector<std::pair<double, double>> pairs = {
      {k_gamma({5.0, 1.0, {}}), 24.0},
      {pk_gamma({5.0, 1.0, 1.0}), 24.0},
      {k_zeta(2.0, 1.0), kPi * kPi / 6.0},
      {pk_zeta(2.0, 1.0, 1.0), kPi * kPi / 6.0},
      {k_gamma_deriv(1, {1.0, 1.0, {}}), -kEulerGamma},
      {k_gamma_deriv(2, {1.0, 1.0, {}}), kEulerGamma * kEulerGamma + kPi * kPi / 6.0},
  };
  double factorial = 1.0;
  for (int m = 1; m <= 4; ++m) {
    factorial *= m;
    pairs.emplace_back(k_polygamma(m, {1.0, 1.0, {}}), (m % 2 ? 1.0 : -1.0) * factorial * zeta[m + 1]);
  }
  for (int n = 0; n <= 4; ++n) {
    pairs.emplace_back(k_gamma_deriv(n, {1.0, 1.0, {}}), kGammaDerivAt1[n]);
    pairs.emplace_back(pk_gamma_deriv(n, {1.0, 1.0, 1.0}), kGammaDerivAt1[n]);
  }
  double worst = 0.0;
  for (auto [got, want] : pairs) worst = std::max(worst, rel_err(got, want));
  const double t = seconds_since(t0);
  return {worst <= 1e-10 && t < 1.0, "max_rel=" + fmt("%.3g", worst) + " time=" + fmt("%.3f", t) + "s"};
}

Outcome oracle_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = crosscheck::run(default_grid(), crosscheck::all_families());
  double worst = 0.0;
  std::size_t points = 0, unconverged = 0;
  std::string where;
  for (const auto& r : results) {
    points += r.points;
    unconverged += r.unconverged;
    if (!(r.max_rel_discrepancy <= worst)) {
      worst = r.max_rel_discrepancy;
      where = r.family + " " + r.worst_point;
    }
  }
  const double t = seconds_since(t0);
  return {worst <= 1e-8 && unconverged == 0 && t < 60.0,
          "points=" + std::to_string(points) + " max_rel=" + fmt("%.3g", worst) + " (" + where +
              ") unconverged=" + std::to_string(unconverged) + " time=" + fmt("%.2f", t) + "s"};
}

Outcome three_way_identity() {
  const auto g = default_grid();
  double worst = 0.0;
  std::size_t points = 0;
  for (double x : g.x)
    for (double k : g.k)
      for (double p : g.p_param) {
        const double direct = pk_gamma({x, k, p});
        const double via_k = std::pow(p / k, x / k) * k_gamma({x, k, {}});
        const double via_classical = std::pow(p, x / k) / k * kernels::gamma(x / k);
        worst = std::max({worst, rel_err(direct, via_k), rel_err(direct, via_classical)});
        ++points;
      }
  return {worst <= 1e-12, "points=" + std::to_string(points) + " max_rel=" + fmt("%.3g", worst)};
}

// Bose integral over the p-k-gamma integral, both by quadrature.
Outcome pzeta_p_independence() {
  const double zeta[] = {0.0, 0.0, kPi * kPi / 6.0, kZeta3, std::pow(kPi, 4) / 90.0};
  double worst = 0.0;
  std::size_t points = 0;
  for (int ratio : {2, 3, 4})
    for (double k : {1.0, 2.0})
      for (double p : {0.5, 1.0, 2.0, 5.0}) {
        const double x = ratio * k;
        const auto bose = oracle::integrate_bose(x - 1.0, k, p);
        const auto gamma = oracle::integrate_pk_gamma({x, k, p});
        worst = std::max(worst, rel_err(bose.value / gamma.value, zeta[ratio]));
        ++points;
      }
  return {worst <= 1e-8, "points=" + std::to_string(points) + " max_rel=" + fmt("%.3g", worst)};
}

Outcome holder_polygamma() {
  const auto r = scan({TheoremId::T1});
  std::string worst;
  const std::size_t below = count_below(r, 1e-9, worst);
  std::size_t equality = 0, equality_bad = 0;
  for (const auto& c : r.checks)
    if (c.inputs.m == c.inputs.n) {
      ++equality;
      equality_bad += std::abs(c.slack) > c.margin + 1e-12;
    }
  return {below == 0 && equality_bad == 0 && r.errors.empty() && !r.checks.empty(),
          "checks=" + std::to_string(r.checks.size()) + " below_margin=" + std::to_string(below) +
              " equality_cases=" + std::to_string(equality) + " equality_violations=" + std::to_string(equality_bad) +
              " errors=" + std::to_string(r.errors.size()) + (worst.empty() ? "" : " worst: " + worst)};
}

Outcome holder_zeta() {
  const auto r = scan({TheoremId::T2, TheoremId::T3});
  std::string worst;
  const std::size_t below = count_below(r, 1e-9, worst);
  std::size_t equality_bad = 0, t3_mismatch = 0, t2 = 0;
  for (const auto& c : r.checks) {
    if (c.inputs.m == c.inputs.n) equality_bad += std::abs(c.slack) > c.margin + 1e-12;
    if (c.theorem != TheoremId::T2) continue;
    ++t2;
    const auto t3 = check_holder_zeta(*c.inputs.m, *c.inputs.n, HolderPair::from_p(*c.inputs.holder_p), *c.inputs.k,
                                      *c.inputs.k);
    t3_mismatch += rel_err(t3.slack, c.slack) > 1e-12;
  }
  return {below == 0 && equality_bad == 0 && t3_mismatch == 0 && r.errors.empty() && t2 > 0,
          "checks=" + std::to_string(r.checks.size()) + " below_margin=" + std::to_string(below) +
              " equality_violations=" + std::to_string(equality_bad) +
              " T3(p=k)!=T2=" + std::to_string(t3_mismatch) + (worst.empty() ? "" : " worst: " + worst)};
}

Outcome turan() {
  const auto r = scan({TheoremId::T4K, TheoremId::T4PK}, [](GridSpec& g) { g.n = {1, 2, 3}; });
  std::size_t below_odd = 0, below_even = 0;
  for (const auto& c : r.checks)
    if (c.slack < -(c.margin + 1e-9)) ++(*c.inputs.n % 2 ? below_odd : below_even);
  const double spot = check_turan_gamma_deriv(1, {1.0, 1.0, {}}, false).slack;
  const bool spot_ok = rel_err(spot, kPi * kPi / 6.0) <= 1e-9;
  Outcome out;
  out.pass = below_odd == 0 && below_even == 0 && spot_ok && r.errors.empty();
  out.detail = "checks=" + std::to_string(r.checks.size()) + " below_margin: odd n=" + std::to_string(below_odd) +
               " even n=" + std::to_string(below_even) + " spot(n=1,x=k=1) rel_err=" +
               fmt("%.3g", rel_err(spot, kPi * kPi / 6.0)) + " errors=" + std::to_string(r.errors.size());
  // The inequality is false for even n (n=2, x=k=1 gives -0.770...); every
  // other part of the criterion must still hold.
  if (!out.pass && below_odd == 0 && spot_ok && r.errors.empty() &&
      rel_err(check_turan_gamma_deriv(2, {1.0, 1.0, {}}, false).slack, kTuranN2) <= 1e-10) {
    out.known_failure = true;
    out.detail += " [known: the bound fails for even n; counterexample n=2, x=k=1]";
  }
  return out;
}

Outcome midpoint_gamma() {
  const auto r = scan({TheoremId::T5, TheoremId::T6}, [](GridSpec& g) {
    g.n = {2, 4};
    g.l = {0, 2};
  });
  std::string worst;
  const std::size_t below = count_below(r, 1e-9, worst);
  std::size_t l0 = 0, l0_bad = 0;
  for (const auto& c : r.checks)
    if (c.inputs.l == 0) {
      ++l0;
      l0_bad += std::abs(c.slack) > c.margin;
    }
  return {below == 0 && l0_bad == 0 && r.errors.empty() && l0 > 0,
          "checks=" + std::to_string(r.checks.size()) + " below_margin=" + std::to_string(below) +
              " l=0 cases=" + std::to_string(l0) + " l=0 nonzero=" + std::to_string(l0_bad) +
              (worst.empty() ? "" : " worst: " + worst)};
}

Outcome midpoint_polygamma() {
  const auto r = scan({TheoremId::T7}, [](GridSpec& g) { g.t7_n = {2, 3, 4, 5}; });
  std::size_t flips = 0, wrong_sign = 0, odd = 0, even = 0;
  double min_abs_d = INFINITY;
  for (const auto& c : r.checks) {
    const double d = c.lhs - c.rhs;
    const bool is_odd = *c.inputs.n % 2 == 1;
    ++(is_odd ? odd : even);
    flips += c.verdict == Verdict::DirectionNegative;
    wrong_sign += is_odd ? d < -c.margin : d > c.margin;
    min_abs_d = std::min(min_abs_d, std::abs(d));
  }
  return {flips == 0 && wrong_sign == 0 && r.errors.empty() && odd > 0 && even > 0,
          "checks=" + std::to_string(r.checks.size()) + " direction_flips=" + std::to_string(flips) +
              " wrong_sign=" + std::to_string(wrong_sign) + " min|d|=" + fmt("%.6g", min_abs_d)};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path();
  std::vector<std::string> bodies;
  double slowest = 0.0;
  for (int i = 0; i < 2; ++i) {
    const auto path = dir / ("kgamma_acceptance_" + std::to_string(i) + ".csv");
    const std::string p = path.string();
    const char* argv[] = {"kgamma", "verify", "--theorems", "all", "--default-grid", "--output", p.c_str()};
    std::ostringstream out, err;
    const auto t0 = std::chrono::steady_clock::now();
    const int code = cli::run(7, argv, out, err);
    slowest = std::max(slowest, seconds_since(t0));
    if (code == cli::kUsage || code == cli::kIo) return {false, "verify exited " + std::to_string(code)};
    const std::string text = read_file(path);
    bodies.push_back(text.substr(text.find('\n') + 1));
    std::filesystem::remove(path);
  }
  const bool same = bodies[0] == bodies[1] && !bodies[0].empty();
  return {same && slowest < 60.0,
          std::string("bodies ") + (same ? "identical" : "DIFFER") + " (" + std::to_string(bodies[0].size()) +
              " bytes) slowest_run=" + fmt("%.3f", slowest) + "s"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"classical reductions at k = 1, p = 1", classical_reductions},
      {"closed forms vs quadrature oracle on the standard grid", oracle_equivalence},
      {"three-way p-k-gamma identity", three_way_identity},
      {"p-independence of the p-k-zeta function", pzeta_p_independence},
      {"Hölder inequality for k-polygamma magnitudes (T1)", holder_polygamma},
      {"Hölder inequalities for k-zeta and p-k-zeta (T2, T3)", holder_zeta},
      {"Turán inequality for derivatives, n in {1, 2, 3} (T4)", turan},
      {"midpoint inequality for even derivatives (T5, T6)", midpoint_gamma},
      {"parity-oriented polygamma midpoint (T7)", midpoint_polygamma},
      {"determinism and runtime of the default verification", determinism},
  };
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %2zu %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
    if (!o.pass && !o.known_failure) ++unexpected;
  }
  std::fflush(stdout);
  return unexpected;
}
