#pragma once

// Command-line front end: `bounds`, `map`, `certify`, `oracle`, `group`.
// Output bytes depend only on the command, its parameters and the seed;
// the worker count never changes them.

#include <iosfwd>
#include <string>
#include <vector>

namespace lpwidim::cli {

/// Runs one invocation; args excludes the program name. Returns the exit
/// status: 0 on success, 1 when a certification or check failed, 2 on a
/// usage or precondition error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lpwidim::cli
