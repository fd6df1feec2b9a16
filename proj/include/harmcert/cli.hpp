#pragma once

#include <iosfwd>

namespace harmcert::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_failed = 2;

/// Runs the command line (argv[0] is the program name). Reports go to `out`
/// unless --out is given; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace harmcert::cli
