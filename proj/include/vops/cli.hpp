#pragma once

// The command-line front end, exposed as a function so tests can run
// commands in-process and compare bytes.
//
// Exit codes: 0 success, 1 validation/domain error, 2 inconclusive under the
// coset cap, 3 I/O error.

#include <iosfwd>
#include <string>
#include <vector>

namespace vops {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace vops
