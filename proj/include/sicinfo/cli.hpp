#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sicinfo::cli {

/// Exit codes: 0 success or SIC check passed, 1 SIC check failed, 2 usage or
/// parse error.
enum ExitCode : int { kOk = 0, kSemanticFailure = 1, kUsageError = 2 };

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sicinfo::cli
