#pragma once

#include <string>
#include <vector>

namespace nkayles::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kCapExceeded = 3,
};

struct Invocation {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// Runs the command line `args` (without the program name) and captures what
/// would go to stdout and stderr.
Invocation run(const std::vector<std::string>& args);

}  // namespace nkayles::cli
