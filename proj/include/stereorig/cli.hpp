#pragma once

#include <ostream>
#include <string>
#include <vector>

// Command-line front end. Exit codes: 0 success, 1 no feasible design,
// 2 input error, 3 internal error.

namespace stereorig {

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stereorig
