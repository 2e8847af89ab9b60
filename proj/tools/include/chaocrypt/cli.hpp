#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chaocrypt::cli {

enum ExitCode : int {
  kOk = 0,
  kValidation = 1,
  kIo = 2,
  kFailure = 3,
};

/// Runs one command line; `args[0]` is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chaocrypt::cli
