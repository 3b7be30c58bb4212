#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torifold {

enum ExitCode : int {
  kExitSuccess = 0,
  kExitValidation = 1,
  kExitParse = 2,
  kExitInternal = 3,
};

/// Runs one command line (args[0] is the program name) and returns the exit
/// code. Reports go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torifold
