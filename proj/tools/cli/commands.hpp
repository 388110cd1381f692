#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planar::cli {

// Exit statuses of the tool.
enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kPreconditionError = 3,
  kResourceLimit = 4,
  kInvariantViolation = 5,
};

inline constexpr unsigned kMaxKmax = 8;
inline constexpr unsigned long long kDefaultLoopLimit = 1000000;

// Runs one invocation. `args` excludes the program name. Reports go to
// `out`, diagnostics to `err`; the return value is the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace planar::cli
