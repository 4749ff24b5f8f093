#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace atk::cli {

enum ExitCode : int {
  kOk = 0,
  kParse = 2,
  kPrecondition = 3,
  kImpossible = 4,
  kVerificationFailed = 5,
};

/// Runs one command line. args[0] is the program name. Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace atk::cli
