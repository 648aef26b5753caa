#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rspec {

/// Base class for every error raised by the core library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A token in a zero-table stream is not a decimal number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& token);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Parsed data violates a ZeroTable invariant. `index` is 1-based.
class ValidationError : public Error {
 public:
  ValidationError(std::size_t index, const std::string& what);
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class EmptyInputError : public Error {
 public:
  EmptyInputError();
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Result not representable (64-bit overflow).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Centered correlation of a sample with zero variance.
class DegenerateSampleError : public Error {
 public:
  using Error::Error;
};

/// Too few baseline entries for a resonance z-score.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace rspec
