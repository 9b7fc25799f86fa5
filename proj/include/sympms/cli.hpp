#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sympms {

// Runs one CLI command.  `in` supplies the payload when --in is absent.
// Exit status: 0 success, 1 malformed input, 2 domain error, 3 internal.
int run_command(const std::vector<std::string>& args, std::istream& in,
                std::ostream& out, std::ostream& err);

}  // namespace sympms
