#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abelsnf::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kInputError = 2;
inline constexpr int kHypothesisError = 3;
inline constexpr int kResourceError = 4;

/// Runs the command line `args` (without the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abelsnf::cli
