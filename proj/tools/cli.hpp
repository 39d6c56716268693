#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dengfan::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_validation_failure = 1,
    exit_usage = 2,
    exit_not_converged = 3,
};

/// Runs the command line `args` (args[0] is the program name). Normal output goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// printf("%.12g"), the number format of every table the tool writes.
std::string format_number(double value);

} // namespace dengfan::cli
