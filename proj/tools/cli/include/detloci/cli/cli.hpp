#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace detloci::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --out names a file; diagnostics go to `err`.
/// Returns 0 on success, 1 on suite failure or mismatch, 2 on usage or
/// input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace detloci::cli
