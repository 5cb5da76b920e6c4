#pragma once

#include <ostream>

namespace plovkit {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInvalidInput = 2,
  kExitPositiveEntropy = 3,
};

/// Parses argv, runs one subcommand and writes its report to `out` (or to
/// the --out file). Diagnostics go to `err`. Returns an ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace plovkit
