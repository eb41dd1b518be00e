#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eventf {

/// Process exit codes of the command-line front end.
enum ExitStatus : int {
    kExitOk = 0,
    kExitFindings = 1,
    kExitLoadFailure = 2,
    kExitUsage = 3,
};

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace eventf
