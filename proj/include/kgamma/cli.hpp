#pragma once

#include <iosfwd>

namespace kgamma::cli {

enum ExitCode : int { kOk = 0, kMathFail = 1, kUsage = 2, kDomain = 3, kIo = 4 };

/// Environment variable that overrides the default relative tolerance.
/// --rel-tol takes precedence.
inline constexpr const char* kRelTolEnv = "KGAMMA_REL_TOL";

/// Entry point of the kgamma binary; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kgamma::cli
