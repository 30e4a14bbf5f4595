#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace k3lm::cli {

enum ExitCode : int {
  kOk = 0,
  kBadConfig = 1,
  kBadArguments = 2,
  kConsistency = 3,
};

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace k3lm::cli
