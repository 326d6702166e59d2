#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace matula::cli {

enum ExitCode : int {
  kOk = 0,
  kComputationError = 1,
  kUsageError = 2,
  kMismatch = 3,
};

// Runs one invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace matula::cli
