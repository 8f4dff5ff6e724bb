#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rainbow {

inline constexpr int k_exit_ok = 0;
inline constexpr int k_exit_hypothesis_failed = 1;
inline constexpr int k_exit_usage = 2;

/// Runs one command line (args excludes the program name). Reads "-" paths
/// from `in`, writes results to `out` and every diagnostic to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace rainbow
