#pragma once

#include <ostream>

namespace pinnacle::cli {

// Parses and executes one command line.  Returns the process exit code:
// 0 on success, 1 when `verify` finds a mismatch, 2 on usage or domain
// errors.  All output goes through the given streams.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pinnacle::cli
