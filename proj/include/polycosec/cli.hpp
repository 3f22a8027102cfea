#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polycosec::cli {

// Exit codes: 0 success, 1 verification failure, 2 usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace polycosec::cli
