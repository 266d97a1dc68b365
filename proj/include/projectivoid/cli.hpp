#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace projectivoid {

/// Runs one CLI invocation; `args` excludes the program name.
/// Exit codes: 0 success, 1 domain error, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace projectivoid
