#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hibi {

/// Runs the command-line driver on the given arguments (program name not
/// included). Returns the process exit code: 0 success, 1 domain error,
/// 2 cap exhausted, 64 usage error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hibi
