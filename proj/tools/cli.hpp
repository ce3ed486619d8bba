#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pdcong {

enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitNotApplicable = 2, kExitInputError = 3 };

/// Runs one pdcong command; args excludes the program name.  The report goes
/// to out (and to --report), diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pdcong
