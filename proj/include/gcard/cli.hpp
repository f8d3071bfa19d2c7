#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gcard {

enum ExitCode : int { kExitPass = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Runs the groupoid-card command line. `args` excludes the program name.
/// Returns 0 when every check passes, 1 when a mathematical check fails and
/// 2 on usage, validation or cap errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcard
