#include <charconv>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "kgamma/format.hpp"
#include "kgamma/harness.hpp"

namespace kgamma::harness {

namespace {

double parse_real(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    if constexpr (std::is_same_v<T, double>) {
      out += format_number(v[i]);
    } else {
      out += std::to_string(v[i]);
    }
  }
  return out;
}

void require_positive(const std::vector<double>& v, const char* axis) {
  for (double x : v)
    if (!(x > 0.0) || !std::isfinite(x)) throw std::invalid_argument(std::string("grid: requires ") + axis + " > 0");
}

void require_nonnegative(const std::vector<int>& v, const char* axis) {
  for (int x : v)
    if (x < 0) throw std::invalid_argument(std::string("grid: requires ") + axis + " >= 0");
}

bool integral(double v) { return std::abs(v - std::round(v)) <= 1e-9; }

// Which axes a theorem walks. Axes it ignores contribute a single "absent"
// slot so the nesting below stays uniform.
struct Axes {
  bool x, k, p, m, n, l, hp;
};

Axes axes_of(TheoremId id) {
  switch (id) {
    case TheoremId::T1: return {true, true, false, true, true, false, true};
    case TheoremId::T2: return {false, true, false, true, true, false, true};
    case TheoremId::T3: return {false, true, true, true, true, false, true};
    case TheoremId::T4K: return {true, true, false, false, true, false, false};
    case TheoremId::T4PK: return {true, true, true, false, true, false, false};
    case TheoremId::T5: return {true, true, false, false, true, true, false};
    case TheoremId::T6: return {true, true, true, false, true, true, false};
    case TheoremId::T7: return {true, true, false, false, true, false, false};
  }
  return {};
}

template <class T>
std::vector<std::optional<T>> slots(bool used, const std::vector<T>& values) {
  if (!used) return {std::nullopt};
  return {values.begin(), values.end()};
}

// Hypotheses of each theorem; points failing them are not part of the sweep.
bool admissible(TheoremId id, const CheckInputs& in, const GridSpec& spec) {
  switch (id) {
    case TheoremId::T1: {
      if (*in.m < 1 || *in.n < 1) return false;
      const HolderPair hp = HolderPair::from_p(*in.holder_p);
      const double s = *in.m / hp.p() + *in.n / hp.q();
      return s >= 1.0 && (!spec.require_integral_order || integral(s));
    }
    case TheoremId::T2:
    case TheoremId::T3: {
      if (*in.m < 1 || *in.n < 1) return false;
      const HolderPair hp = HolderPair::from_p(*in.holder_p);
      const double s = holder_order(*in.m, *in.n, hp);
      return *in.m + 1.0 > *in.k && *in.n + 1.0 > *in.k && s + 1.0 > *in.k;
    }
    case TheoremId::T4K:
    case TheoremId::T4PK: return *in.n >= 1 && *in.n <= 7;
    case TheoremId::T5:
    case TheoremId::T6:
      return *in.n % 2 == 0 && *in.l % 2 == 0 && *in.n >= *in.l && *in.l >= 0 && *in.n + *in.l <= 8;
    case TheoremId::T7: return *in.n >= 2 && *in.n <= 11;
  }
  return false;
}

InequalityCheck evaluate(TheoremId id, const CheckInputs& in, const HarnessPolicy& policy) {
  const EvalPoint pt{in.x.value_or(0.0), in.k.value_or(0.0), in.p_param};
  switch (id) {
    case TheoremId::T1: return check_holder_polygamma(*in.m, *in.n, HolderPair::from_p(*in.holder_p), pt, policy);
    case TheoremId::T2: return check_holder_zeta(*in.m, *in.n, HolderPair::from_p(*in.holder_p), *in.k, {}, policy);
    case TheoremId::T3:
      return check_holder_zeta(*in.m, *in.n, HolderPair::from_p(*in.holder_p), *in.k, in.p_param, policy);
    case TheoremId::T4K: return check_turan_gamma_deriv(*in.n, pt, false, policy);
    case TheoremId::T4PK: return check_turan_gamma_deriv(*in.n, pt, true, policy);
    case TheoremId::T5: return check_midpoint_gamma_deriv(*in.n, *in.l, pt, false, policy);
    case TheoremId::T6: return check_midpoint_gamma_deriv(*in.n, *in.l, pt, true, policy);
    case TheoremId::T7: return check_midpoint_polygamma(*in.n, pt, policy);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

void GridSpec::validate() const {
  require_positive(x, "x");
  require_positive(k, "k");
  require_positive(p_param, "p_param");
  require_nonnegative(m, "m");
  require_nonnegative(n, "n");
  require_nonnegative(l, "l");
  require_nonnegative(t7_n, "t7_n");
  for (double v : holder_p)
    if (!(v > 1.0) || !std::isfinite(v)) throw std::invalid_argument("grid: requires holder_p > 1");
}

std::string GridSpec::describe() const {
  std::string out = "x=" + join(x) + ";k=" + join(k) + ";p_param=" + join(p_param) + ";m=" + join(m) +
                    ";n=" + join(n) + ";l=" + join(l) + ";holder_p=" + join(holder_p) + ";t7_n=" + join(t7_n);
  out += require_integral_order ? ";integral_order=1" : ";integral_order=0";
  return out;
}

GridSpec default_grid() {
  GridSpec g;
  g.x = {0.5, 1, 2, 5, 10};
  g.k = {0.5, 1, 2, 3};
  g.p_param = {0.5, 1, 2, 5};
  g.m = {1, 2, 3, 4};
  g.n = {1, 2, 3, 4};
  g.l = {0, 2};
  g.holder_p = {2, 3, 1.5};
  g.t7_n = {2, 3, 4, 5};
  return g;
}

std::vector<double> parse_real_list(std::string_view text) {
  if (text.find(':') == std::string_view::npos) {
    std::vector<double> out;
    for (auto item : split(text, ',')) out.push_back(parse_real(item));
    return out;
  }
  const auto parts = split(text, ':');
  if (parts.size() < 3 || parts.size() > 4) throw std::invalid_argument("range must be min:max:count[:log]");
  const double lo = parse_real(parts[0]), hi = parse_real(parts[1]);
  const double count_real = parse_real(parts[2]);
  if (!(count_real >= 1.0) || !integral(count_real)) throw std::invalid_argument("range count must be >= 1");
  const auto count = static_cast<std::size_t>(std::round(count_real));
  bool log = false;
  if (parts.size() == 4) {
    if (parts[3] == "log") {
      log = true;
    } else if (parts[3] != "linear") {
      throw std::invalid_argument("range spacing must be 'log' or 'linear'");
    }
  }
  if (log && !(lo > 0.0 && hi > 0.0)) throw std::invalid_argument("log range requires positive endpoints");
  std::vector<double> out;
  for (std::size_t i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
    double v = log ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo))) : lo + t * (hi - lo);
    if (i == count - 1 && count > 1) v = hi;
    out.push_back(v);
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (double v : parse_real_list(text)) {
    if (!integral(v)) throw std::invalid_argument("expected integers, got '" + std::string(text) + "'");
    out.push_back(static_cast<int>(std::round(v)));
  }
  return out;
}

bool ScanReport::any_fail() const {
  for (const auto& c : checks)
    if (c.verdict == Verdict::Fail) return true;
  return false;
}

ScanReport scan_grid(const GridSpec& spec, const std::set<TheoremId>& theorems, const HarnessPolicy& policy) {
  spec.validate();
  policy.accuracy.validate();
  ScanReport report;
  for (TheoremId id : kAllTheorems) {
    if (!theorems.count(id)) continue;
    const Axes ax = axes_of(id);
    const auto& orders = (id == TheoremId::T7 && !spec.t7_n.empty()) ? spec.t7_n : spec.n;
    TheoremSummary summary;
    for (const auto& x : slots(ax.x, spec.x))
      for (const auto& k : slots(ax.k, spec.k))
        for (const auto& p : slots(ax.p, spec.p_param))
          for (const auto& m : slots(ax.m, spec.m))
            for (const auto& n : slots(ax.n, orders))
              for (const auto& l : slots(ax.l, spec.l))
                for (const auto& hp : slots(ax.hp, spec.holder_p)) {
                  CheckInputs in;
                  in.x = x;
                  in.k = k;
                  in.p_param = p;
                  in.m = m;
                  in.n = n;
                  in.l = l;
                  if (hp) {
                    in.holder_p = *hp;
                    in.holder_q = HolderPair::from_p(*hp).q();
                  }
                  if (!admissible(id, in, spec)) continue;
                  try {
                    InequalityCheck c = evaluate(id, in, policy);
                    switch (c.verdict) {
                      case Verdict::Pass: ++summary.pass; break;
                      case Verdict::Fail: ++summary.fail; break;
                      case Verdict::DirectionNegative: ++summary.direction_negative; break;
                    }
                    if (!summary.min_slack || c.slack < *summary.min_slack) {
                      summary.min_slack = c.slack;
                      summary.min_location = c.inputs;
                    }
                    report.checks.push_back(std::move(c));
                  } catch (const std::exception& e) {
                    ++summary.errors;
                    report.errors.push_back({id, in, e.what()});
                  }
                }
    report.summary.emplace_back(id, summary);
  }
  return report;
}

}  // namespace kgamma::harness
