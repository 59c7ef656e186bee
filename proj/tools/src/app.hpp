#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rayzeta::cli {

// Runs the command line `args` (without the program name). Returns the
// process exit code: 0 ok, 2 config error, 3 hypothesis violation,
// 4 verification failure, 1 unexpected internal error.
int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rayzeta::cli
