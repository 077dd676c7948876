// Command-line front end: `quivermod check|count|verify <file> [options]`.
#pragma once

#include <ostream>

namespace quivermod {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quivermod
