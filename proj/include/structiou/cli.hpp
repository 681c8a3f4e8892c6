#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace structiou::cli {

/// Process exit codes.
enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2, kSelfCheck = 3 };

/// Entry point shared by the `structiou` binary and the tests. `args`
/// excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace structiou::cli
