#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sigdoc::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailureThreshold = 1,  // scan finished but too many files failed to parse
  kUsageError = 2,        // bad flags, config, missing input, unwritable output
};

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigdoc::cli
