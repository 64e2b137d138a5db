#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fockproj::cli {

enum ExitCode : int {
  kOk = 0,
  kFailed = 1,          // non-decoherent history, failed evolve/verify check
  kInvalidInput = 2,
  kTruncationBound = 3,
};

/// Full command-line entry point; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fockproj::cli
