#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cyclotome {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitInternal = 1, kExitInvalid = 2, kExitGuard = 3 };

/// Runs the command line (arguments after the program name).
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cyclotome
