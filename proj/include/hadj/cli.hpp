#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hadj::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2 };

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hadj::cli
