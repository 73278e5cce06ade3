#pragma once

#include <stdexcept>

namespace monrep {

// Thrown when two objects that must live in the same S_N / degree disagree.
struct SizeMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when a request exceeds a resource guard.  Guards are explicit
// parameters with documented defaults; callers raise them deliberately.
struct GuardViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact arithmetic produced an impossible value (e.g. a non-integer Schur
// coefficient).  Indicates a bug, never bad user input.
struct InternalArithmeticError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace monrep
