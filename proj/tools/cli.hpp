#pragma once

#include <iosfwd>

namespace termweight::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `termweight` command line. Returns the process exit code:
/// 0 on success, 2 for usage or validation errors, 1 for runtime failures.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace termweight::cli
