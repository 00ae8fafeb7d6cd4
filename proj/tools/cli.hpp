#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace labelflip::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kSemanticFailure = 2 };

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace labelflip::cli
