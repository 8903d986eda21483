#pragma once

#include <stdexcept>
#include <string>

namespace paley {

// Thrown when a precondition on arguments is violated (non-prime p, wrong
// residue class, malformed input, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown by field inversion of zero and by negative powers of zero.
class DivisionByZero : public std::domain_error {
 public:
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// Thrown when a computation would exceed a desk-scale resource bound.
class ResourceLimit : public std::runtime_error {
 public:
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a connection set fails to generate the additive group.
class NotConnected : public std::runtime_error {
 public:
  explicit NotConnected(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the text-format parsers.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace paley
