#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace soliton {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live over different variable sets.
class VarSetMismatch : public Error {
 public:
  using Error::Error;
};

/// A variable name is not part of the operand's variable set.
class UnknownVariable : public Error {
 public:
  using Error::Error;
};

/// Matrix/vector/point arity does not match the variable set.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Floating evaluation left the representable range, or an exact
/// operation would leave the ring.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A constructor's parameter constraint was violated (ordering, positivity,
/// degeneracy).
class ConstraintError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in DSL text; `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed DSL text that violates a semantic constraint.
class SemanticError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace soliton
