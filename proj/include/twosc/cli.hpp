#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twosc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFalse = 1;
inline constexpr int kExitInputError = 2;

/// Runs the command line tool. `args` excludes the program name.
/// Returns 0 on success, 1 when the requested property does not hold,
/// 2 on malformed input or invalid arguments.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace twosc
