#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace opensets {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitExhausted = 2,
  kExitUnsound = 3,
  kExitRefuted = 4,
};

/// Runs one command line (without the program name). JSON goes to out,
/// diagnostics to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace opensets
