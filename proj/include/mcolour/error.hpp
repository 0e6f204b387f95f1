#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcolour {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based; 0 when the error is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An operation was called outside its documented domain (degree bound, linearity, k < 2, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A proven invariant failed at runtime. Always a bug in this library, never bad input.
class InvariantBreach : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search refused because the space exceeds its guard.
class SearchTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace mcolour
