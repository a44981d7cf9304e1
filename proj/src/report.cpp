#include "kgamma/report.hpp"

#include <cstdio>
#include <ctime>

#include "json.hpp"
#include "kgamma/format.hpp"
#include "kgamma/simd.hpp"

namespace kgamma::report {

using harness::CheckInputs;
using harness::ScanReport;

namespace {

template <class T>
std::string field(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, double>) {
    return format_number(*v);
  } else {
    return std::to_string(*v);
  }
}

template <class T>
nlohmann::json json_field(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

void put_inputs(nlohmann::json& j, const CheckInputs& in) {
  j["x"] = json_field(in.x);
  j["k"] = json_field(in.k);
  j["p_param"] = json_field(in.p_param);
  j["m"] = json_field(in.m);
  j["n"] = json_field(in.n);
  j["l"] = json_field(in.l);
  j["holder_p"] = json_field(in.holder_p);
  j["holder_q"] = json_field(in.holder_q);
}

std::string inputs_text(const CheckInputs& in) {
  std::string out;
  auto add = [&](const char* name, const std::string& v) {
    if (v.empty()) return;
    if (!out.empty()) out += ' ';
    out += name;
    out += '=';
    out += v;
  };
  add("x", field(in.x));
  add("k", field(in.k));
  add("p", field(in.p_param));
  add("m", field(in.m));
  add("n", field(in.n));
  add("l", field(in.l));
  add("holder_p", field(in.holder_p));
  return out;
}

// CSV cells never need quoting except free-text error messages.
std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

RunMetadata make_metadata(const harness::HarnessPolicy& policy, const harness::GridSpec& grid,
                          const std::set<harness::TheoremId>& theorems) {
  RunMetadata meta;
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);
  meta.timestamp = stamp;
  meta.version = KGAMMA_VERSION;
  meta.isa = std::string(simd::isa_name(simd::active_isa()));
  meta.rel_tol = policy.accuracy.rel_tol;
  meta.slack_tol = policy.slack_tol;
  meta.grid = grid.describe();
  for (auto id : theorems) {
    if (!meta.theorems.empty()) meta.theorems += ',';
    meta.theorems += harness::to_string(id);
  }
  return meta;
}

std::string render_csv(const ScanReport& report, const RunMetadata& meta) {
  std::string out = "# kgamma " + meta.version + " timestamp=" + meta.timestamp + " isa=" + meta.isa +
                    " rel_tol=" + format_number(meta.rel_tol) + " slack_tol=" + format_number(meta.slack_tol) +
                    " theorems=" + meta.theorems + " grid=" + meta.grid + "\n";
  out += kCsvHeader;
  out += '\n';
  for (const auto& c : report.checks) {
    const auto& in = c.inputs;
    out += std::string(harness::to_string(c.theorem)) + ',' + field(in.x) + ',' + field(in.k) + ',' +
           field(in.p_param) + ',' + field(in.m) + ',' + field(in.n) + ',' + field(in.l) + ',' +
           field(in.holder_p) + ',' + field(in.holder_q) + ',' + format_number(c.lhs) + ',' +
           format_number(c.rhs) + ',' + format_number(c.slack) + ',' + format_number(c.margin) + ',' +
           std::string(harness::to_string(c.verdict)) + '\n';
  }
  for (const auto& e : report.errors) {
    out += "# error," + std::string(harness::to_string(e.theorem)) + ',' + quoted(inputs_text(e.inputs)) + ',' +
           quoted(e.message) + '\n';
  }
  return out;
}

std::string render_json(const ScanReport& report, const RunMetadata& meta) {
  auto records = nlohmann::json::array();
  records.push_back({{"kind", "run"},
                     {"timestamp", meta.timestamp},
                     {"version", meta.version},
                     {"isa", meta.isa},
                     {"rel_tol", meta.rel_tol},
                     {"slack_tol", meta.slack_tol},
                     {"theorems", meta.theorems},
                     {"grid", meta.grid}});
  for (const auto& c : report.checks) {
    nlohmann::json j;
    j["kind"] = "check";
    j["theorem_id"] = std::string(harness::to_string(c.theorem));
    put_inputs(j, c.inputs);
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["slack"] = c.slack;
    j["margin"] = c.margin;
    j["verdict"] = std::string(harness::to_string(c.verdict));
    records.push_back(std::move(j));
  }
  for (const auto& e : report.errors) {
    nlohmann::json j;
    j["kind"] = "error";
    j["theorem_id"] = std::string(harness::to_string(e.theorem));
    put_inputs(j, e.inputs);
    j["message"] = e.message;
    records.push_back(std::move(j));
  }
  return records.dump(1) + "\n";
}

std::string render_summary(const ScanReport& report) {
  std::string out;
  for (const auto& [id, s] : report.summary) {
    char line[160];
    std::snprintf(line, sizeof line, "%-5s checks=%zu pass=%zu fail=%zu direction_negative=%zu errors=%zu",
                  std::string(harness::to_string(id)).c_str(), s.total(), s.pass, s.fail, s.direction_negative,
                  s.errors);
    out += line;
    if (s.min_slack) out += " min_slack=" + format_number(*s.min_slack) + " at " + inputs_text(*s.min_location);
    out += '\n';
  }
  return out;
}

}  // namespace kgamma::report
