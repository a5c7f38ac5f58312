#pragma once

#include <stdexcept>
#include <string>

namespace kummer {

/// Raised when a computed mathematical identity does not hold.
/// The CLI maps this to exit code 1.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by bounded searches that ran out of room (uniformizer search,
/// trial division, monoid enumeration caps).
class BoundExceeded : public std::runtime_error {
 public:
  BoundExceeded(const std::string& what, long long bound)
      : std::runtime_error(what + " (bound " + std::to_string(bound) + ")"),
        bound_(bound) {}
  long long bound() const { return bound_; }

 private:
  long long bound_;
};

}  // namespace kummer
