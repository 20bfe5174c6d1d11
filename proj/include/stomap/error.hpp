#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stomap {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix shapes do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An index lies outside its admissible range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Strand counts of two diagrams do not match, or a list has the wrong arity.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// A value lies outside its mathematical domain (e.g. a probability > 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A matrix violates the column-stochastic invariants.
class NotStochasticError : public Error {
 public:
  NotStochasticError(const std::string& what, std::size_t column)
      : Error(what), column_(column) {}
  /// 1-based index of the offending column, 0 if the problem is the shape.
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// No diagram exists for the requested shape (e.g. [1] -> [0]).
class NoSynthesisError : public Error {
 public:
  using Error::Error;
};

/// Sampling was requested on a diagram without input strands.
class NoInputError : public Error {
 public:
  using Error::Error;
};

/// A redex no longer matches the slice form it is applied to.
class InvalidRedexError : public Error {
 public:
  using Error::Error;
};

/// Malformed diagram expression or matrix document.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  /// 0-based character offset of the error in the input text.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace stomap
