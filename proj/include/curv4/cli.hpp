#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curv4 {

// Runs one CLI invocation in-process.  args excludes the program name.
// Exit codes: 0 pass, 1 check failure, 2 invalid input/flags.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

} // namespace curv4
