#include "kgamma/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kgamma/crosscheck.hpp"
#include "kgamma/errors.hpp"
#include "kgamma/format.hpp"
#include "kgamma/harness.hpp"
#include "kgamma/k_functions.hpp"
#include "kgamma/oracle.hpp"
#include "kgamma/report.hpp"

namespace kgamma::cli {

namespace {

// Raised for argument combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EvalArgs {
  std::string function;
  double x = 0, k = 0, p = 0, s = 0, c = 0;
  int m = 0, n = 0;
  std::map<char, CLI::Option*> opts;

  bool has(char name) const { return opts.at(name)->count() > 0; }
};

struct GridArgs {
  std::string x, k, p, m, n, l, holder_p, t7_n;
  bool default_grid = false;

  void add_to(CLI::App* app, bool with_theorem_axes) {
    app->add_option("--x", x, "x values: a,b,c or min:max:count[:log]");
    app->add_option("--k", k, "k values");
    app->add_option("--p", p, "p-parameter values");
    app->add_option("--m", m, "orders m");
    app->add_option("--n", n, "orders n");
    if (with_theorem_axes) {
      app->add_option("--l", l, "orders l (T5, T6)");
      app->add_option("--holder-p", holder_p, "Hölder exponents p > 1; q = p/(p-1)");
      app->add_option("--t7-n", t7_n, "orders for T7 (defaults to 2,3,4,5)");
      app->add_flag("--default-grid", default_grid, "use the standard grid for every axis not given");
    }
  }

  // Axes not given on the command line keep their standard-grid values.
  harness::GridSpec build() const {
    harness::GridSpec g = harness::default_grid();
    if (!x.empty()) g.x = harness::parse_real_list(x);
    if (!k.empty()) g.k = harness::parse_real_list(k);
    if (!p.empty()) g.p_param = harness::parse_real_list(p);
    if (!m.empty()) g.m = harness::parse_int_list(m);
    if (!n.empty()) g.n = harness::parse_int_list(n);
    if (!l.empty()) g.l = harness::parse_int_list(l);
    if (!holder_p.empty()) g.holder_p = harness::parse_real_list(holder_p);
    if (!t7_n.empty()) g.t7_n = harness::parse_int_list(t7_n);
    g.validate();
    return g;
  }
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

// Default, then the environment, then the flag.
double resolve_rel_tol(const CLI::Option* flag, double flag_value) {
  if (flag->count() > 0) return flag_value;
  if (const char* env = std::getenv(kRelTolEnv)) {
    try {
      std::size_t used = 0;
      const double v = std::stod(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      return v;
    } catch (const std::exception&) {
      throw UsageError(std::string(kRelTolEnv) + " is not a number: '" + env + "'");
    }
  }
  return AccuracyPolicy::kernels().rel_tol;
}

int cmd_eval(const EvalArgs& a, const AccuracyPolicy& policy, std::ostream& out) {
  AccuracyPolicy op = AccuracyPolicy::oracle();
  op.rel_tol = std::max(policy.rel_tol, op.rel_tol);
  const EvalPoint pt{a.x, a.k, {}};
  const EvalPoint ppt{a.x, a.k, a.p};
  const bool fractional = a.has('s');

  struct Function {
    std::string required;
    std::function<double()> closed;
    std::function<QuadratureResult()> quad;
  };
  const std::map<std::string, Function> table = {
      {"k_gamma", {"xk", [&] { return k_gamma(pt, policy); }, {}}},
      {"pk_gamma", {"xkp", [&] { return pk_gamma(ppt, policy); }, {}}},
      {"k_polygamma",
       {fractional ? "xks" : "xkm",
        [&] {
          return fractional ? k_polygamma_magnitude_fractional(FractionalOrder(a.s), pt, policy)
                            : k_polygamma(a.m, pt, policy);
        },
        {}}},
      {"k_zeta", {"xk", [&] { return k_zeta(a.x, a.k, policy); }, {}}},
      {"pk_zeta", {"xkp", [&] { return pk_zeta(a.x, a.k, a.p, policy); }, {}}},
      {"k_gamma_deriv", {"xkn", [&] { return k_gamma_deriv(a.n, pt, policy); }, {}}},
      {"pk_gamma_deriv", {"xkpn", [&] { return pk_gamma_deriv(a.n, ppt, policy); }, {}}},
      {"oracle_k_gamma", {"xk", {}, [&] { return oracle::integrate_k_gamma(pt, op); }}},
      {"oracle_pk_gamma", {"xkp", {}, [&] { return oracle::integrate_pk_gamma(ppt, op); }}},
      {"oracle_k_polygamma",
       {fractional ? "xks" : "xkm", {},
        [&] {
          return fractional ? oracle::integrate_k_polygamma_fractional(a.s, pt, op)
                            : oracle::integrate_k_polygamma(a.m, pt, op);
        }}},
      {"oracle_bose", {"skc", {}, [&] { return oracle::integrate_bose(a.s, a.k, a.c, op); }}},
      {"oracle_k_gamma_deriv", {"xkn", {}, [&] { return oracle::integrate_k_gamma_deriv(a.n, pt, false, op); }}},
      {"oracle_pk_gamma_deriv", {"xkpn", {}, [&] { return oracle::integrate_k_gamma_deriv(a.n, ppt, true, op); }}},
  };

  const auto it = table.find(a.function);
  if (it == table.end()) throw UsageError("unknown function '" + a.function + "'");
  for (char name : it->second.required)
    if (!a.has(name)) throw UsageError(a.function + " requires --" + std::string(1, name));
  if (it->second.closed) {
    out << format_number(it->second.closed()) << "\n";
  } else {
    const QuadratureResult q = it->second.quad();
    out << format_number(q.value) << "\n"
        << "error_estimate=" << format_number(q.error_estimate) << " converged=" << (q.converged ? "true" : "false")
        << "\n";
  }
  return kOk;
}

std::set<harness::TheoremId> parse_theorems(const std::string& text) {
  std::set<harness::TheoremId> out;
  for (const auto& name : split_commas(text)) {
    if (name == "all") {
      out.insert(harness::kAllTheorems.begin(), harness::kAllTheorems.end());
    } else {
      out.insert(harness::theorem_from_string(name));
    }
  }
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical verification of k-gamma and p-k-gamma inequalities"};
  app.name("kgamma");
  app.require_subcommand(1);
  app.set_version_flag("--version", KGAMMA_VERSION);

  double rel_tol = 0.0;
  CLI::Option* rel_tol_opt = nullptr;
  auto add_rel_tol = [&](CLI::App* sub) {
    rel_tol_opt = sub->add_option("--rel-tol", rel_tol, std::string("relative tolerance (env ") + kRelTolEnv + ")");
  };

  // eval
  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "evaluate one function at one point");
  eval->add_option("function", ev.function,
                   "k_gamma pk_gamma k_polygamma k_zeta pk_zeta k_gamma_deriv pk_gamma_deriv, or oracle_k_gamma "
                   "oracle_pk_gamma oracle_k_polygamma oracle_bose oracle_k_gamma_deriv oracle_pk_gamma_deriv")
      ->required();
  ev.opts['x'] = eval->add_option("--x", ev.x);
  ev.opts['k'] = eval->add_option("--k", ev.k);
  ev.opts['p'] = eval->add_option("--p", ev.p);
  ev.opts['m'] = eval->add_option("--m", ev.m, "polygamma order");
  ev.opts['n'] = eval->add_option("--n", ev.n, "derivative order");
  ev.opts['s'] = eval->add_option("--s", ev.s, "real polygamma order, or the Bose exponent");
  ev.opts['c'] = eval->add_option("--c", ev.c, "Bose scale (k or p)");
  add_rel_tol(eval);
  CLI::Option* eval_rel_tol = rel_tol_opt;

  // verify
  GridArgs vg;
  std::string theorems, format = "csv", output;
  double slack_tol = harness::HarnessPolicy{}.slack_tol;
  auto* verify = app.add_subcommand("verify", "sweep theorem slacks over a grid");
  verify->add_option("--theorems", theorems, "comma list of T1 T2 T3 T4K T4PK T5 T6 T7, or all");
  vg.add_to(verify, true);
  add_rel_tol(verify);
  CLI::Option* verify_rel_tol = rel_tol_opt;
  verify->add_option("--slack-tol", slack_tol, "absolute slack allowance");
  verify->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--output", output, "report path (default: standard output)");

  // crosscheck
  GridArgs cg;
  std::string families;
  double threshold = 1e-8;
  auto* cross = app.add_subcommand("crosscheck", "closed forms against quadrature");
  cg.add_to(cross, false);
  add_rel_tol(cross);
  CLI::Option* cross_rel_tol = rel_tol_opt;
  cross->add_option("--families", families, "comma list (default: all)");
  cross->add_option("--threshold", threshold, "largest accepted relative discrepancy");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) {
      AccuracyPolicy policy;
      policy.rel_tol = resolve_rel_tol(eval_rel_tol, rel_tol);
      policy.validate();
      return cmd_eval(ev, policy, out);
    }

    if (*verify) {
      if (theorems.empty()) throw UsageError("verify requires --theorems");
      harness::HarnessPolicy policy;
      policy.accuracy.rel_tol = resolve_rel_tol(verify_rel_tol, rel_tol);
      policy.slack_tol = slack_tol;
      if (!(slack_tol >= 0.0)) throw UsageError("--slack-tol must be >= 0");
      const auto selected = parse_theorems(theorems);
      const auto grid = vg.build();
      const auto scan = harness::scan_grid(grid, selected, policy);
      const auto meta = report::make_metadata(policy, grid, selected);
      const std::string body = format == "json" ? report::render_json(scan, meta) : report::render_csv(scan, meta);
      const std::string summary = report::render_summary(scan);
      if (output.empty()) {
        out << body;
        err << summary;
      } else {
        std::ofstream file(output, std::ios::binary);
        if (!(file << body) || !file.flush()) {
          err << "kgamma: cannot write " << output << "\n";
          return kIo;
        }
        out << summary;
      }
      for (const auto& e : scan.errors) err << "error: " << harness::to_string(e.theorem) << ": " << e.message << "\n";
      if (scan.any_fail()) return kMathFail;
      return scan.errors.empty() ? kOk : kDomain;
    }

    if (*cross) {
      AccuracyPolicy kp;
      kp.rel_tol = resolve_rel_tol(cross_rel_tol, rel_tol);
      const auto grid = cg.build();
      const auto names = families.empty() ? crosscheck::all_families() : split_commas(families);
      const auto results = crosscheck::run(grid, names, kp);
      bool ok = true;
      for (const auto& r : results) {
        const bool pass = r.max_rel_discrepancy <= threshold && r.unconverged == 0;
        ok = ok && pass;
        out << r.family << " points=" << r.points << " max_rel_discrepancy=" << format_number(r.max_rel_discrepancy)
            << " unconverged=" << r.unconverged << (r.worst_point.empty() ? "" : " worst=" + r.worst_point) << " "
            << (pass ? "PASS" : "FAIL") << "\n";
      }
      return ok ? kOk : kMathFail;
    }
  } catch (const UsageError& e) {
    err << "kgamma: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const DomainError& e) {
    err << "kgamma: domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const OverflowError& e) {
    err << "kgamma: overflow: " << e.what() << "\n";
    return kDomain;
  } catch (const UnsupportedOrder& e) {
    err << "kgamma: unsupported order: " << e.what() << "\n";
    return kDomain;
  } catch (const std::invalid_argument& e) {
    err << "kgamma: invalid argument: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace kgamma::cli
