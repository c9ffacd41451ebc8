#pragma once

#include <stdexcept>
#include <string>

namespace rverify {

// Base of every error the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation at a pole (gamma, zeta, ...).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Argument is mathematically valid but outside the implemented range.
class UnsupportedRange : public DomainError {
 public:
  using DomainError::DomainError;
};

// Result magnitude not representable in double precision.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Iterative procedure failed to meet its stopping criterion.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace rverify
