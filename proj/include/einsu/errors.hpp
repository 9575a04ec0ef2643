#pragma once

#include <stdexcept>
#include <string>

namespace einsu {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};
class DomainError : public Error {
 public:
  using Error::Error;
};
class ParameterError : public Error {
 public:
  using Error::Error;
};
class IndexError : public Error {
 public:
  using Error::Error;
};
class DegenerateError : public Error {
 public:
  using Error::Error;
};
class NumericalConsistencyError : public Error {
 public:
  using Error::Error;
};
class IncompleteTableError : public Error {
 public:
  using Error::Error;
};
class UnsupportedShapeError : public Error {
 public:
  using Error::Error;
};
class RefinementError : public Error {
 public:
  using Error::Error;
};
class EliminationMismatchError : public Error {
 public:
  using Error::Error;
};

/// Raised when an existence statement the solver relies on is not met.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace einsu
