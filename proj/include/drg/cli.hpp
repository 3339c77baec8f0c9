#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace drg::cli {

// Runs one command given argv-style arguments (excluding the program name).
// Results go to out, diagnostics to err. Returns the process exit code:
// 0 = success, 1 = mathematical alarm, 2 = usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace drg::cli
