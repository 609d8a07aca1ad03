#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sawtm {

// Runs the command-line tool with the given arguments (without the program
// name) and returns its exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sawtm
