#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace regcyc {

/// Exit codes: 0 success, 1 verification or property failure, 2 usage or
/// input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

}  // namespace regcyc
