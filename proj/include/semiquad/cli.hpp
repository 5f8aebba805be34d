#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semiquad {

enum ExitCode : int { kExitOk = 0, kExitInputError = 1, kExitInconclusive = 2 };

/// Runs one command line (without the program name). Regular output goes to
/// `out`, diagnostics to `err`.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semiquad
