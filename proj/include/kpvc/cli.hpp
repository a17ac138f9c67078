#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kpvc::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kIoError = 1,         // missing or unwritable file
  kParseError = 2,      // malformed file, bad flags, invalid generator spec
  kInvalidInstance = 3, // well-formed file describing an invalid instance
  kHeuristicFailure = 4,
  kInfeasible = 5,
};

/// Runs one `kpvc` invocation; args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace kpvc::cli
