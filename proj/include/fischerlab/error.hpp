#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fischerlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands disagree on arity, or an index/point does not match the arity.
class ArityMismatch : public Error {
 public:
  using Error::Error;
};

/// Operands live over different coefficient fields (Q vs Q(i)).
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// Precondition violated by the caller (bad degree, constant psi, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An operator image has a monomial outside the requested target basis.
class BasisOverflow : public Error {
 public:
  using Error::Error;
};

/// No q was found on any tried slice. Inconclusive, never a proof of
/// impossibility.
class NoDecompositionFound : public Error {
 public:
  NoDecompositionFound(int slack, const std::string& what)
      : Error(what), slack_(slack) {}
  int slack() const noexcept { return slack_; }

 private:
  int slack_;
};

/// The Dirichlet slice system F(q) = Lap(f) is inconsistent.
class UnsolvableSlice : public Error {
 public:
  using Error::Error;
};

/// Boundary sampling could not find a real positive root along any ray.
class NoBoundaryHit : public Error {
 public:
  using Error::Error;
};

/// Polynomial expression could not be parsed; carries a 0-based offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + ": " +
              message),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An identifier that is not among the configured variable names.
class UnknownVariable : public ParseError {
 public:
  UnknownVariable(std::size_t position, const std::string& name)
      : ParseError(position, "unknown variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace fischerlab
