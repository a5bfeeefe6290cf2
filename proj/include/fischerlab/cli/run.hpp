#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fischerlab::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitUndetermined = 3,
};

/// Runs one invocation. args excludes the program name. Reports go to `out`
/// (or --out FILE), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fischerlab::cli
