#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rackmod::cli {

/// Runs `rackmod <args...>`; args[0] is the program name. The JSON report
/// goes to `out`, diagnostics and timing to `err`. Returns the exit code:
/// 0 success or valid, 1 invalid input or failed check, 2 operational error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rackmod::cli
