#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rootbias::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kExcluded = 3 };

/// Runs one command line (args excludes the program name) and returns the
/// process exit code. All output goes to `out` / `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rootbias::cli
