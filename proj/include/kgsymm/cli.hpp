#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kgsymm::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int { kOk = 0, kInvalidConfig = 2, kSolverFailure = 3, kAlgebraFailure = 4 };

/// Runs the front end on `args` (without the program name). Reports go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kgsymm::cli
