#pragma once

#include <ostream>

namespace rkit {

enum ExitCode : int {
  kExitOk = 0,
  kExitDomain = 1,          // infeasible, no representation, out of range, mismatch
  kExitUsage = 2,
  kExitCounterexample = 3,
};

/// Entry point of the `rkit` command line tool.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rkit
