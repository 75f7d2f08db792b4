#pragma once

// JSON records emitted by the command-line tool.

#include "quasigrow/covering.hpp"
#include "quasigrow/deceptions.hpp"
#include "quasigrow/hyperlift.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace quasigrow {

using Json = nlohmann::json;

std::string tool_version();

/// One CLI invocation. Keys serialize sorted and nothing time-dependent is
/// stored, so identical invocations print identical records.
struct RunRecord {
  std::string command;
  Json parameters = Json::object();
  Json outputs = Json::object();
  std::string tool_version = quasigrow::tool_version();
  bool exact_mode = true;

  Json to_json() const;
  static RunRecord from_json(const Json& j);
  /// Two-space indented JSON with a trailing newline.
  std::string dump() const;
  static RunRecord parse(std::string_view text);

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// {seed, n_right, n_left, letters, heights, boundary_right, geometry: {w}}
Json covering_json(const Covering& c, const GoldenNumber& seed, std::size_t n_right,
                   std::size_t n_left);

Json interval_json(const GoldenInterval& i);
Json deception_json(const DeceptionReport& r);
Json statistics_json(const GrowthStatistics& s);

}  // namespace quasigrow
