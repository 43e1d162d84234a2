#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace atplanar::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kCapExceeded = 3,
};

// args excludes the program name. "-" as a path means `in` or `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace atplanar::cli
