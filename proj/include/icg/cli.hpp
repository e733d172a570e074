#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace icg::cli {

/// Process exit codes of the icg tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kResource = 2,
  kDiscrepancy = 3,
};

/// Runs one command line (without the program name) and returns the exit code.
/// Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace icg::cli
