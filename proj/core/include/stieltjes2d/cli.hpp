#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stieltjes2d {

// Runs one CLI command. Exit codes: 0 success, 1 usage or evaluation
// error, 2 certificate violated.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace stieltjes2d
