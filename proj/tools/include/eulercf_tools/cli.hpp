#pragma once

#include <iosfwd>

namespace eulercf::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDivergence = 3;

/// Entry point of the eulercf command line. Writes normal output to `out`
/// and diagnostics to `err`; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eulercf::tools
