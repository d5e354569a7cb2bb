#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schur {

/// Runs one CLI invocation (args exclude the program name). Returns the
/// process exit code: 0 success, 1 a checked assertion failed (a bound or
/// identity was violated), 2 usage or input error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schur
