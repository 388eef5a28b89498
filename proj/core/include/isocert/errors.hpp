#pragma once

#include <stdexcept>
#include <string>

namespace isocert {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad index, non-positive width, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two polynomials built over different symbol tables were combined.
class SymbolTableMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// An evaluation point left a symbol of the expression unbound.
class UnboundSymbol : public Error {
 public:
  explicit UnboundSymbol(const std::string& name)
      : Error("unbound symbol '" + name + "'"), name_(name) {}
  const std::string& symbol() const noexcept { return name_; }

 private:
  std::string name_;
};

/// The denominator of a rational function vanishes at the evaluation point.
class PoleError : public Error {
 public:
  explicit PoleError(const std::string& factor)
      : Error("pole: denominator factor (" + factor + ") vanishes at the point"), factor_(factor) {}
  const std::string& factor() const noexcept { return factor_; }

 private:
  std::string factor_;
};

/// Interval evaluation met a denominator whose enclosure contains zero.
class PossiblePole : public Error {
 public:
  PossiblePole() : Error("possible pole: denominator enclosure contains 0") {}
};

}  // namespace isocert
