#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braid3::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFalse = 1,
  kUsage = 2,
  kCapExceeded = 3,
};

/// argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with the program name supplied.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braid3::cli
