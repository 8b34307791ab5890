#pragma once

// Command-line front end, written as a library so tests can drive it
// in-process. `args` is the argument list without the program name, in
// natural order.

#include <iosfwd>
#include <string>
#include <vector>

namespace sl2ext {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapExceeded = 3;

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sl2ext
