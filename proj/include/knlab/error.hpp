#pragma once

#include <stdexcept>
#include <string>

namespace knlab {

// Base of everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// A precondition on the mathematical input was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Numeric or series refinement did not reach the requested precision.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace knlab
