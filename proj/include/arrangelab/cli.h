#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arrangelab::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
    ok = 0,
    counterexample = 1,  // verify found a failure, or a partition was not nice
    bound = 2,           // a resource bound was hit
    input_error = 3,     // unreadable or malformed input, bad flags
};

/// Runs the command line `args` (args[0] is the program name). Input named
/// "-" or omitted is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace arrangelab::cli
