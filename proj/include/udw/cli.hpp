#pragma once

#include <iosfwd>

namespace udw {

// Exit statuses of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_malformed = 1,
  exit_nonconvergence = 2,
  exit_regime_rejected = 3,
  exit_io = 4,
};

// udw-harvest {compute, sweep, figure, limits}; writes results to `out` and
// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace udw
