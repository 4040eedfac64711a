#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace alphalab {

// Runs the command line (args without the program name).  Returns the exit
// status: 0 success, 1 verification failure, 2 usage or capability error.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alphalab
