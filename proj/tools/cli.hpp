#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chuacrypt::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kInputError = 2,
  kKeyError = 3,  // DegenerateKey or NonFiniteState
};

// Runs the chuacrypt command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chuacrypt::cli
