#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace truncorr::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kInputError = 2, kCapabilityError = 3 };

/// Parses args (argv without the program name) and runs one command.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace truncorr::cli
