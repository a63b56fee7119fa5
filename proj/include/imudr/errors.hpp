#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace imudr {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (logs, config, calibration, scripts).
/// Carries the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Semantically invalid configuration (bad detector window, dt, thresholds).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Filesystem failures (missing input, unwritable output directory).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace imudr
