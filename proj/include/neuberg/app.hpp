#pragma once

/// Command-line front end. `run` takes the arguments after the program name.
/// Exit codes: 0 success, 1 a verification failed, 2 usage or input error.

#include <iosfwd>
#include <string>
#include <vector>

namespace neuberg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// The enumeration bound: `--max-enum` when given, else NEUBERG_MAX_ENUM,
/// else the library default.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace neuberg
