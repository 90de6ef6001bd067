#pragma once

#include <iosfwd>

namespace rwls::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 1,
  kNumericError = 2,
  kIoError = 3,
  kVerificationFailed = 4,
};

/// Runs one `rwls` command; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rwls::cli
