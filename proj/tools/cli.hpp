#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fuzzytrack::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kBadData = 2,
};

/// Runs the command line `args` (args[0] is the program name).
/// Output files are only written when the command succeeds.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuzzytrack::cli
