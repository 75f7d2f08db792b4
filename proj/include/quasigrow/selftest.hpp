#pragma once

#include <cstddef>
#include <ostream>
#include <string>

namespace quasigrow {

struct SelftestOptions {
  /// Exhaustive checks cover every word up to this length.
  std::size_t max_len = 12;
  /// Runs the suite against alpha domains with B's upper end closed, which
  /// the suite must reject.
  bool inject_fault = false;
};

struct SelftestResult {
  bool ok = true;
  std::size_t checks = 0;
  std::string counterexample;
};

/// Domain partition, forcing bounds, left/right step inversion and the
/// three-way factor agreement (feasible interval, substring search, strip).
SelftestResult run_selftest(const SelftestOptions& opts, std::ostream& log);

}  // namespace quasigrow
