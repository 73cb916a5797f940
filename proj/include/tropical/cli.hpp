#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropical::cli {

/// Process exit codes.
enum ExitCode : int {
  ok = 0,
  usage_error = 1,
  parse_error = 2,
  dimension_error = 3,
  precondition_error = 4,
  negative_answer = 5,  ///< the query was answered "no", e.g. a non-member
  internal_error = 6,
};

/// Runs one command line (without the program name). Point and matrix input
/// is read from `-i FILE` or else from `in`.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tropical::cli
