#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specktral::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // a verification did not hold
inline constexpr int kExitUsage = 2;   // bad arguments or malformed input
inline constexpr int kExitGuard = 3;   // a size guard refused the work

/// Runs one command; args excludes the program name. Reports go to `out`,
/// diagnostics to `err`, and `in` stands in for any "-" input file.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace specktral::cli
