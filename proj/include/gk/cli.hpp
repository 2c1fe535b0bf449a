#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gk {

// Runs one CLI command. args excludes the program name. Returns 0 on
// success, 1 when a verification diff is nonempty, 2 on usage or domain
// errors. All output is written to out/err so callers can capture it.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gk
