#pragma once

#include <stdexcept>
#include <string>

namespace fuzzassess {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bad input data: unparsable rows, out-of-range scores, empty groups.
class InputError : public Error {
public:
  using Error::Error;
};

class DomainError : public InputError {
public:
  using InputError::InputError;
};

class EmptyGroupError : public InputError {
public:
  using InputError::InputError;
};

class EmptyInputError : public InputError {
public:
  using InputError::InputError;
};

class ParseError : public InputError {
public:
  ParseError(std::size_t line, const std::string &what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Invalid grade scale or trapezoid geometry.
class ConfigError : public Error {
public:
  using Error::Error;
};

/// Degenerate polygons, empty particle systems.
class GeometryError : public Error {
public:
  using Error::Error;
};

/// API misuse, e.g. comparing points produced by different methods.
class UsageError : public Error {
public:
  using Error::Error;
};

}  // namespace fuzzassess
