#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ctwkit::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalid = 1,      // invalid decomposition or other violated precondition
  kFormat = 2,       // malformed input file or command line
  kLimit = 3,        // instance exceeds an exact-solver limit
  kInternal = 4,
};

/// Runs one `ctwkit` command line; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctwkit::cli
