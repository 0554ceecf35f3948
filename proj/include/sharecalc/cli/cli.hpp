#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sharecalc::cli {

// Runs one command line (args excludes the program name).  Returns the exit
// code: 0 success, 1 domain error (parse, type or membership failure, failed
// property), 2 usage error.  `in` is read when the term argument is "-".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sharecalc::cli
