#pragma once

#include <stdexcept>
#include <string>

namespace icann {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// log/sqrt of a non-SPD tensor, inversion of a degenerate stretch, det(C) <= 0.
class NotPositiveDefiniteError : public Error {
public:
  using Error::Error;
};

// iterative solver hit its cap or a degenerate update (Broyden, lateral Newton)
class NoConvergenceError : public Error {
public:
  using Error::Error;
};

// NaN or infinity produced during a forward or reverse sweep
class NonFiniteError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& msg, long line)
      : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  long line() const { return line_; }

private:
  long line_;
};

class MonotonicityError : public Error {
public:
  using Error::Error;
};

class DegenerateDataError : public Error {
public:
  using Error::Error;
};

class InvalidConstantError : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace icann
