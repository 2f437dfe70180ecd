#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace infratop::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,          // parse, validation or usage error
  kStrictFailure = 2,  // check --strict saw a failing CHECK/FORCED verdict
  kForcedViolated = 3,
};

/// Runs the command line (args excludes the program name) writing to out/err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace infratop::cli
