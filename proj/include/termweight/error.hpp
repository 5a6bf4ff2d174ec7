#pragma once

#include <stdexcept>
#include <string>

namespace termweight {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A flag or configuration value outside its allowed set.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed corpus input. Carries the 1-based line number when known.
class IngestError : public Error {
 public:
  IngestError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A caller broke a documented precondition.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class TrainingError : public Error {
 public:
  using Error::Error;
};

class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// File could not be opened, read or written; the message names the path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace termweight
