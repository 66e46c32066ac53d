#pragma once

#include <stdexcept>
#include <string>

namespace chorn {

// Raised when an enumeration or recursion would exceed the configured size
// guard. The CLI maps this to exit code 2.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a coefficient above the truncation bound is requested; the
// value is unknown, not zero.
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace chorn
