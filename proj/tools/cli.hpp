#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace selfdual::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInvalidInput = 2,
  kBoundExceeded = 3,
  kNotFound = 4,
};

/// args excludes the program name. Answers go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace selfdual::cli
