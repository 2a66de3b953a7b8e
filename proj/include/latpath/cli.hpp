#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace latpath {

/// Exit codes: 0 success, 1 an identity or cross-check failed, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latpath
