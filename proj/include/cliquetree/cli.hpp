#pragma once

// Command-line front end; exposed as a function so tests can drive it
// in-process.  Exit codes: 0 success or pass, 1 validation fail, 2 usage
// error, 3 domain error.

#include <iosfwd>
#include <string>
#include <vector>

namespace cliquetree {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cliquetree
