#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilpoly {

// Dispatches one command line (without the program name). Returns 0 on
// success, 1 on domain errors (message names the error case), 2 on usage
// errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nilpoly
