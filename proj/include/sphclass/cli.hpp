#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sphclass::cli {

/// Runs one command; `args` excludes the program name. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sphclass::cli
