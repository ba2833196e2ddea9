#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace codelattice::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kParseError = 2,
  kRankTooLarge = 3,
  kConstructionError = 4,
  kBudgetExceeded = 5,
};

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace codelattice::cli
