#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symshift::cli {

enum ExitCode : int {
    Yes = 0,
    No = 1,
    InputError = 2,
    InternalError = 3,
};

/// Runs one command line (without the program name). Verdict commands exit
/// with Yes/No; parsing and input problems with InputError.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace symshift::cli
