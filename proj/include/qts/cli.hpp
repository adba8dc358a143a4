#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qts::cli {

/// Process exit codes.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_parse = 2,
    exit_routing = 3,
    exit_internal = 4,
};

/// Runs the `qts` command line with `args` (args[0] is the program name).
/// Normal output goes to `out`, diagnostics to `err`.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace qts::cli
