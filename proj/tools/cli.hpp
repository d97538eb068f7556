#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace godeaux::cli {

// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace godeaux::cli
