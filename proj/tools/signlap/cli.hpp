#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace signlap::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kUsage = 2,
  kDisagreement = 3,
  kStrictFailure = 4,
};

/// Runs the command line `args` (without the program name). The primary
/// output goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace signlap::cli
