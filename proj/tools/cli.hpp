#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dim::cli {

enum ExitCode : int { kYes = 0, kNo = 1, kUsage = 2, kInternal = 3 };

// Runs one dimsolve invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dim::cli
