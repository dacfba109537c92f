#pragma once

#include <stdexcept>
#include <string>

namespace geoprove {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the protocol parser. `line`/`column` are 1-based.
class ProtocolError : public Error {
 public:
  enum class Kind { Syntax, UndefinedLabel, DuplicateLabel };

  ProtocolError(Kind kind, int line, int column, std::string detail);

  Kind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  /// The expected token for syntax errors, the offending label otherwise.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Kind kind_;
  int line_;
  int column_;
  std::string detail_;
};

class AlgebraError : public Error {
 public:
  using Error::Error;
};

class MissingVariableError : public Error {
 public:
  using Error::Error;
};

class TimeoutError : public Error {
 public:
  using Error::Error;
};

/// A nonzero constant was derived from the construction polynomials.
class InconsistentSystemError : public Error {
 public:
  using Error::Error;
};

class UnsupportedStepError : public Error {
 public:
  using Error::Error;
};

}  // namespace geoprove
