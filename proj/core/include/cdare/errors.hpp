#pragma once

#include <stdexcept>
#include <string>

namespace cdare {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Inputs with incompatible or non-square dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument violates a documented precondition.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A matrix left the domain of the operator being evaluated,
/// e.g. R_X = R + B^H conj(X) B turned numerically singular.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A dense factorization or eigensolver failed.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent instance file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cdare
