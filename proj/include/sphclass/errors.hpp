#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sphclass {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rank outside the admissible range for a Cartan family (e.g. B1, E9).
class InvalidRank : public Error {
 public:
  using Error::Error;
};

/// Dynkin diagram is disconnected (D2 = A1 x A1).
class NonSimple : public Error {
 public:
  using Error::Error;
};

/// A p-adic expansion was requested in characteristic zero.
class CharZero : public Error {
 public:
  using Error::Error;
};

/// Parameters of a group factor violate its invariants (Sp of odd degree, ...).
class InvalidFactor : public Error {
 public:
  using Error::Error;
};

/// Descriptor text could not be parsed. `column()` is 0-based into the input.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::string input, std::size_t column)
      : Error(std::move(message)), input_(std::move(input)), column_(column) {}

  const std::string& input() const noexcept { return input_; }
  std::size_t column() const noexcept { return column_; }

  /// Two-line rendering with a caret under the offending column.
  std::string annotated() const {
    return std::string("parse error at column ") + std::to_string(column_ + 1) + ": " + what() +
           "\n  " + input_ + "\n  " + std::string(column_, ' ') + "^";
  }

 private:
  std::string input_;
  std::size_t column_;
};

/// Descriptor names a root-system type where a concrete embedding is required.
class AmbiguousDescriptor : public Error {
 public:
  using Error::Error;
};

/// The embedded classification dataset failed its checksum or could not be parsed.
class DatasetIntegrityError : public Error {
 public:
  using Error::Error;
};

/// The requested ambient group is not covered by the classification.
class OutOfScope : public Error {
 public:
  using Error::Error;
};

}  // namespace sphclass
