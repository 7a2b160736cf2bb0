#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace covernum::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kCapacity = 3,
  kUnsupported = 4,
  kBudget = 5,
};

/// Runs `covernum <args...>`; args excludes the program name. Reads stdin for input "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace covernum::cli
