#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibcube {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitNegative = 1, kExitFailure = 2 };

/// Parses argv (argv[0] is the program name) and runs the subcommand. JSON
/// goes to out, human diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fibcube
