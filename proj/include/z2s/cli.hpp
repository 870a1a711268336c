#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace z2s::cli {

/// Runs one command; `args` excludes the program name. Returns 0 on
/// success, 1 on a verification mismatch and 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace z2s::cli
