#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oddcolor {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitVerifyFailed = 2;
inline constexpr int kExitAlgorithmFailed = 3;

/// Runs one command; `args` excludes the program name. A FILE argument of
/// "-" reads from `in`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace oddcolor
