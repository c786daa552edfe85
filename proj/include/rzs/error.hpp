#pragma once

#include <stdexcept>
#include <string>

namespace rzs {

// Base for every error raised by the library. The CLI maps these to exit
// codes; callers that only care about success can catch rzs::Error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input violated a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of a formula (e.g. log of a
// non-positive quantity).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Requested accuracy cannot be delivered in double precision at this height
// or with the configured number of terms.
class PrecisionExceeded : public Error {
 public:
  using Error::Error;
};

// Zero scan could not reconcile its count with the counting formula.
class AuditFailure : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature gave up before reaching its tolerance.
class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

// Gap equation has no root in the physical regime m^2 <= cutoff^2.
class NoSolution : public Error {
 public:
  using Error::Error;
};

class InsufficientZeros : public Error {
 public:
  using Error::Error;
};

}  // namespace rzs
