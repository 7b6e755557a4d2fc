#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gompf::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kDomainError = 2,
  kVerifyFailed = 3,
};

/// Runs one invocation. args excludes the program name. Documents are read
/// from `in` unless --input is given and written to `out` unless --output is.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace gompf::cli
