#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dsb::cli {

enum ExitCode { kDecided = 0, kInvalid = 1, kUndecided = 2 };

/// Runs one invocation; args excludes the program name. One JSON document
/// is written to `out` on exit codes 0 and 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dsb::cli
