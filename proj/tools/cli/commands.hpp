#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qwalk::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUnexpected = 1,
    kExitInputError = 2,
};

/// Runs one invocation (args exclude the program name). The JSON report goes
/// to `out`, a one-line summary or the error to `err`. Graph files named "-"
/// are read from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qwalk::cli
