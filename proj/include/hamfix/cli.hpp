#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hamfix {

// args excludes the program name. Exit codes: 0 all checks pass, 1 semantic
// violations, 2 structural or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hamfix
