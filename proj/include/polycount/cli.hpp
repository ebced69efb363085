#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polycount::cli {

// Exit codes: 0 success, 2 usage or input errors, 3 verification or OEIS
// mismatch.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMismatch = 3;

// Runs one CLI invocation. `args` excludes the program name. Regular output
// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polycount::cli
