#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace swalk {

/// Exit codes shared by every command.
enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_usage = 2 };

/// Runs one command line (without the program name) and returns its exit
/// code. Reports go to `out`, diagnostics to `err`. Commands: check, members,
/// reconstruct, refute, counterexample, corpus.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace swalk
