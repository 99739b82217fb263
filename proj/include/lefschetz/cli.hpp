#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lefschetz {

/// Exit codes shared by every command.
enum ExitCode : int {
    kExitOk = 0,      ///< success; for slp, the property holds
    kExitFailed = 1,  ///< the property or a certificate fails
    kExitError = 2,   ///< usage or input error
};

/// Runs the command line `args` (without the program name). Human output
/// goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lefschetz
