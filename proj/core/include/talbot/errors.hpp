#pragma once

#include <stdexcept>
#include <string>

namespace talbot {

// Bad arguments: degree mismatch, out-of-range n, malformed input.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// n <= 2: every point of V lies on a wall, no chamber has an interior.
class DegenerateDimension : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

// The zero vector has no image in PV; all forms vanish on it.
class ZeroPoint : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

// A class function whose multiplicities are not nonnegative integers.
class NotACharacter : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Floating-point result failed its integrality or residual check.
class NumericalFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Construction did not converge (signals a bug, not a mathematical obstruction).
class ConstructionFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An internal invariant was broken.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace talbot
