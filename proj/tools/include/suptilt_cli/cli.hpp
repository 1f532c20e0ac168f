#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace suptilt::cli {

enum ExitCode { kSuccess = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs one command line (without the program name). Results go to `out`;
/// the effective-config line, warnings and usage errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Fixture directory: $SUPTILT_OEIS_DIR, else the directory baked in at build time.
std::string default_fixture_dir();

}  // namespace suptilt::cli
