#pragma once

#include <iosfwd>

namespace gexp {

/// Exit codes of the batch frontend.
enum ExitCode { exit_ok = 0, exit_mismatch = 1, exit_usage = 2 };

/// Parses argv (argv[0] is the program name), runs one subcommand and writes
/// the report to out (or to --output). Diagnostics go to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gexp
