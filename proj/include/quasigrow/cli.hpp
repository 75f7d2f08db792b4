#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quasigrow {

/// Exit codes of the command-line tool.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int parse_error = 2;
inline constexpr int out_of_range = 3;
inline constexpr int inconsistent = 4;
inline constexpr int budget_exceeded = 5;
}  // namespace exit_code

/// Runs the tool with args (without the program name), writing results to out
/// and diagnostics to err. The enumeration budget comes from QUASIGROW_BUDGET
/// when set.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quasigrow
