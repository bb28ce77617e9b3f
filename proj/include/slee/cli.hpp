#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slee {

// Command-line front end. args excludes the program name. Reports go to
// out, diagnostics to err; graphs come from inline arguments, --input, or
// in when neither is given. Returns the process exit status:
// 0 success, 1 verification failure, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace slee
