#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxplus::cli {

/// Process exit statuses.
enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,     // parse/validation failure
  kPrecondition = 2,     // mathematical precondition failed (e.g. non-member)
  kSelfCheckFailed = 3,  // a certificate failed its own verification
};

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxplus::cli
