#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace embform::cli {

/// Process exit codes. Usage errors come from the argument parser.
enum Exit : int {
  ok = 0,
  other_error = 1,
  usage_error = 2,
  parse_error = 3,
  budget_exceeded = 4,
  invalid_encoding = 5,
  verification_failed = 6,
};

/// Runs one command line (args[0] is the program name). Failures print a
/// single line `error: code=<name> message="<text>"` to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace embform::cli
