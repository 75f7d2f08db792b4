#include "quasigrow/run_record.hpp"

namespace quasigrow {

std::string tool_version() { return QUASIGROW_VERSION; }

Json RunRecord::to_json() const {
  return Json{{"command", command},
              {"parameters", parameters},
              {"outputs", outputs},
              {"tool_version", tool_version},
              {"exact_mode", exact_mode}};
}

RunRecord RunRecord::from_json(const Json& j) {
  RunRecord r;
  r.command = j.at("command").get<std::string>();
  r.parameters = j.at("parameters");
  r.outputs = j.at("outputs");
  r.tool_version = j.at("tool_version").get<std::string>();
  r.exact_mode = j.at("exact_mode").get<bool>();
  return r;
}

std::string RunRecord::dump() const { return to_json().dump(2) + "\n"; }

RunRecord RunRecord::parse(std::string_view text) { return from_json(Json::parse(text)); }

Json covering_json(const Covering& c, const GoldenNumber& seed, std::size_t n_right,
                   std::size_t n_left) {
  Json heights = Json::array();
  for (const auto& t : c.tiles()) heights.push_back(t.y_left().to_string());
  Json j{{"seed", seed.to_string()},
         {"n_right", n_right},
         {"n_left", n_left},
         {"letters", to_string(c.letters())},
         {"heights", std::move(heights)},
         {"geometry", {{"w", c.geometry().w.to_string()}}}};
  if (!c.empty()) j["boundary_right"] = c.tiles().back().y_right().to_string();
  return j;
}

Json interval_json(const GoldenInterval& i) {
  if (i.is_empty()) return Json{{"empty", true}};
  return Json{{"empty", false},
              {"lo", i.lo().to_string()},
              {"hi", i.hi().to_string()},
              {"closed_lo", i.closed_lo()},
              {"closed_hi", i.closed_hi()},
              {"text", i.to_string()}};
}

Json deception_json(const DeceptionReport& r) {
  Json depth = r.composition_depth_to_bb ? Json(*r.composition_depth_to_bb) : Json(nullptr);
  return Json{{"word", to_string(r.word)},
              {"length", r.word.size()},
              {"window", r.window},
              {"composition_depth_to_bb", std::move(depth)},
              {"witness_windows", r.witness_windows},
              {"b_at_both_ends", r.b_at_both_ends()}};
}

Json statistics_json(const GrowthStatistics& s) {
  return Json{{"trials", s.trials},
              {"failures", s.failures},
              {"stuck", s.stuck},
              {"failure_fraction", s.failure_fraction()},
              {"mean_failure_length", s.mean_failure_length}};
}

}  // namespace quasigrow
