#pragma once

#include <iosfwd>
#include <string>

namespace powersum::cli {

enum ExitCode : int {
    kPass = 0,
    kIdentityMismatch = 1,
    kCoverFailure = 2,
    kBadInput = 3,
};

/// Runs one command line. Everything is written to `out` and `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Directory of the stored reference figures, if one was configured at
/// build time.
std::string default_golden_dir();

}  // namespace powersum::cli
