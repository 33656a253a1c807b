#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringlab {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands (or an operand and a set) belong to different rings.
class RingMismatchError : public Error {
 public:
  using Error::Error;
};

/// A binary operation was invoked without its second operand, or vice versa.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// A ring could not be built: size cap exceeded, degenerate parameters,
/// non-monic modulus, set that is not an ideal, ...
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// The operation is outside what the laboratory supports for this ring
/// (noncommutative nilradical, noncommutative group-ring base, ...).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// An operation precondition does not hold (n_max = 0, e not idempotent,
/// ideal not nil, 2 not invertible, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Source position inside a ring expression. Lines and columns are 1-based.
struct SourceSpan {
  std::size_t offset = 0;
  std::size_t length = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Positioned diagnostic from the ring-expression parser.
class ParseError : public Error {
 public:
  enum class Kind { lexical, syntax, arity };

  ParseError(Kind kind, SourceSpan where, std::string message,
             std::vector<std::string> expected = {});

  Kind kind() const noexcept { return kind_; }
  const SourceSpan& where() const noexcept { return where_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& message() const noexcept { return message_; }

 private:
  Kind kind_;
  SourceSpan where_;
  std::string message_;
  std::vector<std::string> expected_;
};

/// Construction failure attributed to a node of a parsed expression.
class PositionedConstructionError : public ConstructionError {
 public:
  PositionedConstructionError(SourceSpan where, const std::string& message);
  const SourceSpan& where() const noexcept { return where_; }

 private:
  SourceSpan where_;
};

}  // namespace ringlab
