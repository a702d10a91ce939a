#pragma once

#include <stdexcept>
#include <string>

namespace cy2 {

// Bad input: malformed files, non-generic charges, unsupported quivers.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition of an operation was not met by its arguments.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An engine invariant failed. For the reduction engine this means one of the
// phase-improvement statements was observed to be false on a concrete input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cy2
