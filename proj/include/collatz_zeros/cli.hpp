#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace collatz::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 2,
  kNonConvergence = 3,
  kCertification = 4,
  kIo = 5,
};

/// Runs `collatz-zeros <subcommand> ...`. args excludes the program name.
/// Never throws; library errors map onto the exit codes above.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace collatz::cli
