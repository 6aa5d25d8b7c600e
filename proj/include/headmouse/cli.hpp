#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace headmouse {

// Entry point behind the `headmouse` binary. args excludes the program name.
// Returns 0 on success, 1 on validation/usage errors, 2 on I/O errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace headmouse
