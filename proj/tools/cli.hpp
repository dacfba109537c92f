#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geoprove::cli {

enum ExitCode { kProved = 0, kNotProved = 1, kTimeout = 2, kInputError = 3 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geoprove::cli
