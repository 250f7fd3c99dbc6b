#pragma once

#include <stdexcept>
#include <string>

namespace fpcalc {

/// Parameter outside the legal range of a law or operation.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Query point outside the domain where a transform is defined or reachable.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Newton continuation or bracketing failed to converge.
class ConvergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed measure-spec or manifest input.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fpcalc
