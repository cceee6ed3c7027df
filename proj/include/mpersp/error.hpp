#pragma once

#include <stdexcept>
#include <string>

namespace mpersp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// A value (eigenvalue, scalar argument) fell outside a function's domain.
class DomainError : public Error {
 public:
  DomainError(const std::string& what, double offending)
      : Error(what), offending_(offending) {}
  double offending() const { return offending_; }

 private:
  double offending_;
};

// Minimum eigenvalue below the strict-positivity floor.
class PositivityError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Caller violated a documented precondition (wrong atom class, bad parameter).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A generated instance does not satisfy its theorem's hypothesis.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace mpersp
