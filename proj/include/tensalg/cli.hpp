#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tensalg {

// Command-line front end. `args` excludes the program name. Returns the
// process exit status: 0 success, 1 failed checks, 2 usage, parse or
// evaluation errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tensalg
