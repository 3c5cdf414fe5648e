#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quadring {

enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidInput = 1,
    kExitExcluded = 2,
    kExitNotFound = 3,
    kExitVerificationFailed = 4,
};

/// Runs the command line `args` (args[0] is the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadring
