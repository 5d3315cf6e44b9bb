#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pmsat::cli {

/// Runs one invocation (args excludes the program name). Primary output goes
/// to `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pmsat::cli
