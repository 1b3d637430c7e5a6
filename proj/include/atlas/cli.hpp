#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace atlas {

// Executes one CLI invocation.  Returns the process exit status:
// 0 success, 2 parse/validation error, 3 Weil-validation failure,
// 4 precision exhausted after adaptive retries, 5 internal assertion.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace atlas
