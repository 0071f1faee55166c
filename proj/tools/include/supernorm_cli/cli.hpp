#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace supernorm::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_usage = 2,
    exit_resource = 3,
};

// Parses args (without the program name) and runs one subcommand. Data goes
// to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Shortest decimal that parses back to the same double.
std::string format_double(double v);

}  // namespace supernorm::cli
