#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aisr::cli {

enum ExitCode : int {
  kOk = 0,        // success, or the identity holds
  kRejected = 1,  // the identity fails, a chain is rejected, a check fails
  kUsage = 2,     // usage or structural errors
};

/// Runs one command line (args excludes the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aisr::cli
