#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyperbound::cli {

enum ExitCode : int { kOk = 0, kMalformed = 1, kPrecondition = 2 };

// Runs one command line (args excludes the program name). JSON results go
// to out, diagnostics and usage text to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperbound::cli
