#pragma once

#include <charconv>
#include <string>

namespace kgamma {

/// Shortest decimal string that parses back to exactly v.
inline std::string format_number(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace kgamma
