#pragma once

#include <stdexcept>
#include <string>

namespace opnum {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the documented domain (|z| > 1, r >= 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An intermediate quantity landed on a branch cut.
class BranchError : public Error {
 public:
  using Error::Error;
};

// Taylor extraction could not meet its aliasing tolerance.
class SeriesError : public Error {
 public:
  using Error::Error;
};

// A quadrature or series failed to converge under refinement.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

// Numerical evidence that the requested operator is unbounded.
class UnboundedOperator : public Error {
 public:
  using Error::Error;
};

// Truncation caps, block counts or memory limits exceeded.
class BudgetError : public Error {
 public:
  using Error::Error;
};

class DecompositionError : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

}  // namespace opnum
