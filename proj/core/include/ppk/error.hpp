#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ppk {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad expression text, undeclared identifier, wrong arity.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A mathematical precondition does not hold (division by zero, pole, broken identity).
class MathError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public MathError {
 public:
  using MathError::MathError;
};

class PoleError : public MathError {
 public:
  PoleError(const std::string& what, std::string vanishing)
      : MathError(what), vanishing_(std::move(vanishing)) {}

  /// Printed form of the denominator that vanishes at the evaluation point.
  const std::string& vanishing() const noexcept { return vanishing_; }

 private:
  std::string vanishing_;
};

}  // namespace ppk
