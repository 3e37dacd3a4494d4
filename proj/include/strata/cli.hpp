#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace strata {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitFlagged = 2;
inline constexpr int kExitUsage = 64;

/// Runs one `strata` invocation; argv[0] is the program name. The report
/// goes to --out when given, else to `out`; diagnostics go to `err`.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace strata
