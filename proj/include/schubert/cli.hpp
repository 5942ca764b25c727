#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace schubert::cli {

/// Entry point of the command-line tool. args excludes the program name.
/// Returns 0 on success, 1 on an internal consistency failure and 2 on bad
/// arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schubert::cli
