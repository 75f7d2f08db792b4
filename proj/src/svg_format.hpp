#pragma once

#include <fmt/format.h>

#include <string>

namespace quasigrow::detail {

/// Fixed three-decimal coordinates; "-0.000" folds to "0.000".
inline std::string coord(double v) {
  std::string s = fmt::format("{:.3f}", v);
  if (s == "-0.000") s = "0.000";
  return s;
}

}  // namespace quasigrow::detail
