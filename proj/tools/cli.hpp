#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bosam::cli {

// Runs one invocation; args excludes the program name. Returns the process exit code:
// 0 success, 1 I/O or domain failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bosam::cli
