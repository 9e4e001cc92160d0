#pragma once

#include <stdexcept>
#include <string>

namespace bcjq {

class DivisionByZero : public std::domain_error {
 public:
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// Raised for zero divisors in the bicomplex ring and for singular recurrence
/// parameters; the message names the component that vanished.
class NotInvertible : public std::domain_error {
 public:
  explicit NotInvertible(const std::string& what) : std::domain_error(what) {}
};

/// A division that the algebra guarantees to be exact left a remainder.
/// Always an implementation bug or a mistranscribed formula.
class InexactDivision : public std::logic_error {
 public:
  explicit InexactDivision(const std::string& what) : std::logic_error(what) {}
};

/// A value computed over Q(w) was expected to be rational but is not.
class ProjectionError : public std::logic_error {
 public:
  explicit ProjectionError(const std::string& what) : std::logic_error(what) {}
};

class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace bcjq
