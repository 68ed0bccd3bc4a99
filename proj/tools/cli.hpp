#pragma once

#include <iosfwd>

namespace bohr::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitBadFlags = 2;
inline constexpr int kExitParamOutOfRange = 3;
inline constexpr int kExitInconclusive = 4;

// Runs the bohr-lab command line with argv[0] being the program name.
// Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace bohr::cli
