#pragma once

#include <stdexcept>
#include <string>

namespace embform {

enum class ErrorCode {
  invalid_argument,
  parse_error,
  budget_exceeded,
  invalid_encoding,
  verification_failed,
  io_error,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& what) : Error(ErrorCode::invalid_argument, what) {}
};

/// Malformed input text. `line` is 1-based, or 0 when unknown.
struct ParseError : Error {
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(ErrorCode::parse_error, line ? "line " + std::to_string(line) + ": " + what : what), line(line) {}
  std::size_t line;
};

/// A computation was refused or aborted because it would exceed its budget.
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& what) : Error(ErrorCode::budget_exceeded, what) {}
};

struct InvalidEncoding : Error {
  explicit InvalidEncoding(const std::string& what) : Error(ErrorCode::invalid_encoding, what) {}
};

/// An oracle check (idealness, slice validity, facet equality) failed.
struct VerificationFailed : Error {
  explicit VerificationFailed(const std::string& what) : Error(ErrorCode::verification_failed, what) {}
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error(ErrorCode::io_error, what) {}
};

}  // namespace embform
