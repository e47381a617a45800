#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace drs::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainFailure = 1,
  kIoOrParse = 2,
  kCapsExceeded = 3,
};

/// Runs one subcommand. args excludes the program name. Everything the
/// command prints goes to out (results) or err (diagnostics).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace drs::cli
