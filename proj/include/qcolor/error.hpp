#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcolor {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid quandle / coloring parameters (gcd violations, out-of-range orders).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `line()` is 1-based, 0 when not line-oriented.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A diagram or table that parsed but violates a structural invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Search space exceeds the configured cap.
class ScaleError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcolor
