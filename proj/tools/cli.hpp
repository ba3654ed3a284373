#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cuberep::cli {

/// Exit status: found / success.
inline constexpr int kExitOk = 0;
/// A negative answer was computed (verification failed, nothing found).
inline constexpr int kExitNegative = 1;
/// Usage, parse or I/O error; nothing was computed.
inline constexpr int kExitError = 2;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cuberep::cli
