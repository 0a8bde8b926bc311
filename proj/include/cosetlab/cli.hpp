#ifndef COSETLAB_CLI_HPP
#define COSETLAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cosetlab::cli {

// Exit statuses shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailure = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kBoundExceeded = 3;

// Runs the command line given as plain arguments (no program name), writing
// reports to `out` and diagnostics to `err`; returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cosetlab::cli

#endif
