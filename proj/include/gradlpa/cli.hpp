#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gradlpa::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDecidedNo = 1,
  kInputError = 2,
  kPreconditionFailed = 3,
};

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gradlpa::cli
