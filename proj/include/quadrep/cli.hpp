#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quadrep {

// Exit statuses of the command-line front end.
inline constexpr int kExitFound = 0;
inline constexpr int kExitNone = 1;
inline constexpr int kExitInvalid = 2;

// Runs one invocation. `args` excludes the program name.
// Subcommands: solve, sqrtmod, factor, cf, smith.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadrep
