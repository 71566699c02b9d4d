#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hopfint::cli {

// Exit codes: 0 success, 1 domain error, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfint::cli
