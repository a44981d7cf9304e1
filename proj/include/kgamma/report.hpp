#pragma once

#include <string>

#include "kgamma/harness.hpp"

namespace kgamma::report {

struct RunMetadata {
  std::string timestamp;  // UTC, ISO 8601
  std::string version;
  std::string isa;
  double rel_tol = 0.0;
  double slack_tol = 0.0;
  std::string grid;
  std::string theorems;
};

/// Filled from the build version, the active ISA and the current clock.
RunMetadata make_metadata(const harness::HarnessPolicy& policy, const harness::GridSpec& grid,
                          const std::set<harness::TheoremId>& theorems);

inline constexpr const char* kCsvHeader =
    "theorem_id,x,k,p_param,m,n,l,holder_p,holder_q,lhs,rhs,slack,margin,verdict";

/// Line 1: "# " metadata (the only line carrying the timestamp).
/// Line 2: kCsvHeader. Then one row per check in scan order, absent fields
/// left empty. Evaluation errors follow as "# error," lines.
std::string render_csv(const harness::ScanReport& report, const RunMetadata& meta);

/// A single JSON array: a {"kind": "run", ...} metadata object, then one
/// {"kind": "check", ...} object per check carrying the CSV fields (null when
/// absent), then {"kind": "error", ...} objects.
std::string render_json(const harness::ScanReport& report, const RunMetadata& meta);

/// Per-theorem counts and minimum slack, one line per theorem.
std::string render_summary(const harness::ScanReport& report);

}  // namespace kgamma::report
