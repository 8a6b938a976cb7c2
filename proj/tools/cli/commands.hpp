#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schublines::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kInvalidInput = 2 };

/// Runs one invocation of the command-line tool. `args` excludes the
/// program name. Exit codes: 0 success, 1 verification or inequality
/// failure, 2 invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schublines::cli
