#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace arbor::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kIdentityFailure = 1,
  kParseError = 2,
  kDomainError = 3,
  kInconclusive = 4,
};

/// Runs one command line (without the program name). Normal output goes to
/// `out` unless --out redirects it; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arbor::cli
