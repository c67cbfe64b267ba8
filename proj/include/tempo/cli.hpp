#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tempo::cli {

// Entry point shared by the binary and the tests. args excludes the program
// name. Exit codes: 0 success or positive verdict, 1 negative verdict,
// 2 bad usage or bad input, 3 refused by a size guard.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tempo::cli
