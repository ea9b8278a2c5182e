#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bergman::cli {

/// Runs the command line `args` (args[0] is the program name) and returns the
/// exit code: 0 success, 1 computation-level failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bergman::cli
