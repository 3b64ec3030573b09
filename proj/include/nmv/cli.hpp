#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nmv {

enum ExitCode : int { kOk = 0, kInternal = 1, kInput = 2, kHypothesis = 3, kStability = 4 };

/// Runs the nmv command line with args (without the program name); the
/// report goes to out, diagnostics to err. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nmv
