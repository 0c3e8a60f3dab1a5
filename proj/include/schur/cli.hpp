#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace schur {

// full command-line front end; returns the process exit code
// 0 success, 1 verification failure, 2 usage or internal error
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schur
