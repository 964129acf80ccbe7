#pragma once

#include <stdexcept>
#include <string>

namespace eispq {

struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateInput : MathError {
  using MathError::MathError;
};
struct NotCoprime : MathError {
  using MathError::MathError;
};
struct NotProjectivePoint : MathError {
  using MathError::MathError;
};
struct NotAUnit : MathError {
  using MathError::MathError;
};
struct NotConjugable : MathError {
  using MathError::MathError;
};
struct NotInSubgroup : MathError {
  using MathError::MathError;
};
struct DegenerateTrace : MathError {
  using MathError::MathError;
};
struct NotACusp : MathError {
  using MathError::MathError;
};
struct LevelMismatch : MathError {
  using MathError::MathError;
};
struct PrecisionFailure : MathError {
  using MathError::MathError;
};

// Raised when no exceptional matrix pair exists for a class; carries the
// gcd that obstructs the Bezout solve.
struct NotInstantiable : MathError {
  long offending_gcd;
  NotInstantiable(const std::string& what, long g)
      : MathError(what), offending_gcd(g) {}
};

}  // namespace eispq
