#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ftqc {

/// Dispatches one CLI invocation (without the program name). Returns the
/// process exit status: 0 on success, 2 on usage/validation errors, 3 when a
/// request is well-formed but infeasible.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ftqc
