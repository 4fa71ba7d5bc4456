#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cliquemerge::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;        // success, YES, SAT
inline constexpr int kExitNegative = 1;  // NO, UNSAT, audit found violations
inline constexpr int kExitError = 2;     // bad usage, unreadable input, ...

/// Runs the command line (without the program name) and returns the exit
/// code. All output goes to out/err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cliquemerge::cli
