#pragma once

#include <stdexcept>
#include <string>

namespace kgamma {

/// Thrown when an argument lies outside a function's domain. The message
/// names the violated precondition (for example "x > 0").
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown instead of returning an infinity.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Thrown for derivative / polygamma orders beyond the supported caps.
class UnsupportedOrder : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

[[noreturn]] inline void domain_fail(const std::string& what, const std::string& precondition) {
  throw DomainError(what + ": requires " + precondition);
}

}  // namespace detail
}  // namespace kgamma
