#include "embform/error.hpp"

namespace embform {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::budget_exceeded: return "budget_exceeded";
    case ErrorCode::invalid_encoding: return "invalid_encoding";
    case ErrorCode::verification_failed: return "verification_failed";
    case ErrorCode::io_error: return "io_error";
  }
  return "unknown";
}

}  // namespace embform
