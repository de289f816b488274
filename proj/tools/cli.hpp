#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ifnorder::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kValidation = 3,
  kInternal = 4,
};

/// Runs one command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ifnorder::cli
