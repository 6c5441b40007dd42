#pragma once

#include <stdexcept>
#include <string>

namespace sagbilab {

// Mismatched exponent-vector lengths, wrong ambient dimension, etc.
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Two polynomials from different rings met in one operation.
class RingMismatchError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

// initial_term of the zero polynomial.
class ZeroPolynomialError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A precondition stated by the caller-visible contract failed.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Pair queue (or similar) exceeded its configured cap.
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Exponent arithmetic left the machine-width range.
class ExponentOverflowError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

}  // namespace sagbilab
