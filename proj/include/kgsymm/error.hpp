#pragma once

#include <stdexcept>
#include <string>

namespace kgsymm {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the domain of an operation (bad parameters, bad quantum numbers).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A scalar root could not be located or polished.
class SolverError : public Error {
 public:
  using Error::Error;
};

/// An iterative procedure (grid refinement, self-consistency) failed to settle.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace kgsymm
