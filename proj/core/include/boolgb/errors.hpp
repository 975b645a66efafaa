#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace boolgb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionError : public Error {
 public:
  using Error::Error;
};

class ModeMismatch : public Error {
 public:
  ModeMismatch() : Error("polynomials belong to different ring modes") {}
};

class ZeroPolynomial : public Error {
 public:
  explicit ZeroPolynomial(const std::string& what = "operation undefined on the zero polynomial")
      : Error(what) {}
};

/// Malformed polynomial text. `position()` is the 0-based byte offset of the
/// offending character; `line()` is 1-based and 0 when parsing a single string.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position, std::size_t line = 0)
      : Error((line ? "line " + std::to_string(line) + ": " : std::string()) + message +
              " at position " + std::to_string(position)),
        message_(message),
        position_(position),
        line_(line) {}
  const std::string& message() const noexcept { return message_; }
  std::size_t position() const noexcept { return position_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string message_;
  std::size_t position_;
  std::size_t line_;
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(const std::string& name)
      : Error("unknown variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class NotAGroebnerBasis : public Error {
 public:
  using Error::Error;
};

/// The full-ring and Boolean-ring engines produced different bases.
class EngineMismatch : public Error {
 public:
  using Error::Error;
};

class NotZeroDimensional : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class TooManyVariables : public Error {
 public:
  using Error::Error;
};

class FieldPolysMissing : public Error {
 public:
  FieldPolysMissing()
      : Error("generator set lacks field polynomials; evaluation does not decide membership") {}
};

}  // namespace boolgb
