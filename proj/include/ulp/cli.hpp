#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ulp {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitConfigError = 1,
  kExitNumericalError = 2,
  kExitIoError = 3,
};

/// Entry point behind the `ulpsim` executable.
///
/// Subcommands:
///   sweep  run every (scheme, SNR) pair and write the result files
///   point  run one scheme at one SNR
///   gaps   recompute the gap table from an existing result CSV
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ulp
