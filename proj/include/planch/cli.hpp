#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planch {

// Runs the full command-line surface on args (program name excluded) and
// returns the process exit code: 0 success, 1 verification failure, 2 usage
// or parse error, 3 exceeded bound or failed internal check.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace planch
