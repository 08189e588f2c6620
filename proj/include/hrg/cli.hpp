#pragma once

#include <iosfwd>

namespace hrg {

/// Process exit codes shared by every subcommand.
enum ExitCode : int { exit_yes = 0, exit_no = 1, exit_error = 2, exit_unknown = 3 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hrg
