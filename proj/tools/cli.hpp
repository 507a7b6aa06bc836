#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace charzero {

/// Runs the command-line tool in-process.  `args` excludes the program name.
/// Exit codes: 0 success, 1 verification violations, 2 usage/IO/schema
/// errors, 3 resource cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace charzero
