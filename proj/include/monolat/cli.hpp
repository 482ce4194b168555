#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace monolat {

/// Exit codes of the command-line tool.
enum exit_status : int { exit_ok = 0, exit_usage = 1, exit_validation = 2, exit_capability = 3 };

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monolat
