#pragma once

#include <string>
#include <vector>

namespace rpl {

/// Entry point behind the rough-plaplace binary.  args excludes the program
/// name.  Returns the process exit code: 0 success, 1 invalid parameter,
/// 2 solver failure, 3 verification assertion failure.
int run_cli(const std::vector<std::string>& args);

} // namespace rpl
