#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace numrat::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 internal invariant breach, 2 input or schema error,
/// 3 precondition error. The mathematical verdict never affects it.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace numrat::cli
