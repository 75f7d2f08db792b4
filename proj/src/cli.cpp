#include "quasigrow/cli.hpp"

#include "quasigrow/covering.hpp"
#include "quasigrow/deceptions.hpp"
#include "quasigrow/hyperlift.hpp"
#include "quasigrow/run_record.hpp"
#include "quasigrow/selftest.hpp"
#include "quasigrow/words.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>

namespace quasigrow {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GoldenNumber parse_seed(const std::string& text) {
  GoldenNumber seed = GoldenNumber::parse(text);
  if (!height_range().contains(seed)) {
    throw OutOfRange("seed " + seed.to_string() + " (~" + fmt::format("{:.6f}", seed.to_double()) +
                     ") is outside [0, tau)");
  }
  return seed;
}

std::size_t enumeration_budget() {
  const char* env = std::getenv("QUASIGROW_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultEnumerationBudget;
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(env, &pos);
    if (pos != std::string(env).size() || v < 0) throw std::invalid_argument(env);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw UsageError(std::string("QUASIGROW_BUDGET must be a non-negative integer, got \"") + env +
                     "\"");
  }
}

std::string depth_text(const std::optional<std::size_t>& d) {
  return d ? std::to_string(*d) : std::string("none");
}

struct GrowArgs {
  std::string seed;
  std::size_t length = 0;
  std::size_t left = 0;
  std::string format = "letters";
  std::string w;
};

struct VerifyArgs {
  std::string word;
  std::string format = "text";
};

struct DeceptionArgs {
  std::size_t window = 0;
  std::size_t max_len = 0;
  std::size_t min_len = 1;
  std::optional<std::size_t> demo_trials;
  std::optional<std::uint64_t> rng_seed;
  std::size_t demo_max_len = 50;
  std::string format = "table";
};

struct LiftArgs {
  std::string word;
  std::string mode = "scaled";
  std::string offset = "0";
  std::string svg;
};

struct RenderArgs {
  std::string seed;
  std::size_t length = 0;
  std::size_t left = 0;
  std::string w;
  std::string output;
};

struct SelftestArgs {
  bool quick = false;
  std::optional<std::size_t> max_len;
  bool inject_fault = false;
};

TileGeometry geometry_from(const std::string& w) {
  return w.empty() ? TileGeometry::square() : TileGeometry(GoldenNumber::parse(w));
}

int cmd_grow(const GrowArgs& a, std::ostream& out) {
  const GoldenNumber seed = parse_seed(a.seed);
  TileGeometry geometry = geometry_from(a.w);
  const Covering c = grow(seed, a.length, a.left, geometry);
  if (a.format == "letters") {
    out << to_string(c.letters()) << "\n";
  } else if (a.format == "svg") {
    out << render_svg(c);
  } else {
    RunRecord rec;
    rec.command = "grow";
    rec.parameters = {{"seed", seed.to_string()},
                      {"length", a.length},
                      {"left", a.left},
                      {"w", c.geometry().w.to_string()}};
    rec.outputs = covering_json(c, seed, a.length, a.left);
    out << rec.dump();
  }
  return exit_code::ok;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const Word w = parse_word(a.word);
  const GoldenInterval interval = feasible_interval(w);
  const bool by_interval = !interval.is_empty();
  const bool by_substring = is_factor_substring(w);
  const GoldenNumber width = strip_width(w, PerpMode::scaled);
  const bool by_strip = width < golden::tau();
  const auto depth = deflation_illegality_depth(w, kReportDepthCap);

  if (by_interval != by_substring || by_substring != by_strip || (depth && by_interval)) {
    err << "internal inconsistency on " << a.word << ": interval=" << by_interval
        << " substring=" << by_substring << " strip=" << by_strip
        << " deflation_depth=" << depth_text(depth) << "\n";
    return exit_code::inconsistent;
  }

  if (a.format == "json") {
    RunRecord rec;
    rec.command = "verify";
    rec.parameters = {{"word", a.word}};
    rec.outputs = {{"factor", by_substring},
                   {"feasible_interval", interval_json(interval)},
                   {"strip_width", width.to_string()},
                   {"strip_width_approx", width.to_double()},
                   {"strip_containable", by_strip},
                   {"deflation_depth_to_bb", depth ? Json(*depth) : Json(nullptr)}};
    out << rec.dump();
  } else {
    out << "word: " << a.word << "\n"
        << "factor: " << (by_substring ? "yes" : "no") << "\n"
        << "feasible_interval: " << interval.to_string() << "\n"
        << "strip_width: " << width.to_string() << " (~" << fmt::format("{:.6f}", width.to_double())
        << ", bound tau, " << (by_strip ? "contained" : "violated") << ")\n"
        << "deflation_depth_to_BB: " << depth_text(depth) << "\n";
  }
  return exit_code::ok;
}

int cmd_deceptions(const DeceptionArgs& a, std::ostream& out) {
  if (a.demo_trials && !a.rng_seed) {
    throw UsageError("deceptions: --rng-seed is required with --demo-trials");
  }
  const std::size_t budget = enumeration_budget();
  std::vector<DeceptionReport> reports;
  for (std::size_t len = std::max<std::size_t>(a.min_len, 1); len <= a.max_len; ++len) {
    auto found = enumerate_deceptions(len, a.window, budget);
    std::move(found.begin(), found.end(), std::back_inserter(reports));
  }

  std::optional<GrowthStatistics> greedy;
  std::optional<GrowthStatistics> covering;
  if (a.demo_trials) {
    greedy = greedy_growth_failure_demo(a.window, *a.demo_trials, a.demo_max_len, *a.rng_seed);
    covering = covering_growth_failure_demo(*a.demo_trials, a.demo_max_len, *a.rng_seed);
  }

  if (a.format == "json") {
    RunRecord rec;
    rec.command = "deceptions";
    rec.parameters = {{"window", a.window}, {"max_len", a.max_len}, {"min_len", a.min_len},
                      {"budget", budget}};
    Json rows = Json::array();
    for (const auto& r : reports) rows.push_back(deception_json(r));
    rec.outputs = {{"deceptions", std::move(rows)}, {"count", reports.size()}};
    if (greedy) {
      rec.parameters["demo_trials"] = *a.demo_trials;
      rec.parameters["demo_max_len"] = a.demo_max_len;
      rec.parameters["rng_seed"] = *a.rng_seed;
      rec.outputs["window_rule_growth"] = statistics_json(*greedy);
      rec.outputs["covering_growth"] = statistics_json(*covering);
    }
    out << rec.dump();
    return exit_code::ok;
  }

  out << fmt::format("{:>6}  {:>6}  {:<24}  {:>11}  {}\n", "window", "length", "word",
                     "depth_to_BB", "B_at_both_ends");
  for (const auto& r : reports) {
    out << fmt::format("{:>6}  {:>6}  {:<24}  {:>11}  {}\n", r.window, r.word.size(),
                       to_string(r.word), depth_text(r.composition_depth_to_bb),
                       r.b_at_both_ends() ? "yes" : "no");
  }
  out << "rows: " << reports.size() << "\n";
  if (greedy) {
    const auto line = [&](const char* name, const GrowthStatistics& s) {
      out << fmt::format("{}: trials {} failures {} stuck {} failure_fraction {:.6f}\n", name,
                         s.trials, s.failures, s.stuck, s.failure_fraction());
    };
    line("window-rule growth", *greedy);
    line("covering growth", *covering);
  }
  return exit_code::ok;
}

int cmd_lift(const LiftArgs& a, std::ostream& out) {
  const Word w = parse_word(a.word);
  const GoldenNumber offset = GoldenNumber::parse(a.offset);
  const PerpMode mode = a.mode == "geometric" ? PerpMode::geometric : PerpMode::scaled;
  const Staircase s = lift(w);
  const PerpTrace trace = perp_trace(w, offset, mode);
  const PerpTrace scaled = perp_trace(w, offset, PerpMode::scaled);
  const GoldenNumber width = strip_width(w, mode);
  const GoldenNumber threshold = strip_threshold(mode);
  const bool in_strip = std::all_of(scaled.coeffs.begin(), scaled.coeffs.end(),
                                    [](const GoldenNumber& c) { return height_range().contains(c); });

  Json points = Json::array();
  for (const auto& p : s.points) points.push_back({p.x, p.y});
  Json coords = Json::array();
  Json approx = Json::array();
  for (std::size_t i = 0; i < trace.size(); ++i) {
    coords.push_back(trace.coeffs[i].to_string());
    approx.push_back(trace.value(i));
  }

  RunRecord rec;
  rec.command = "lift";
  rec.parameters = {{"word", a.word}, {"mode", a.mode}, {"offset", offset.to_string()}};
  rec.outputs = {{"points", std::move(points)},
                 {"trace", std::move(coords)},
                 {"trace_approx", std::move(approx)},
                 {"trace_units", mode == PerpMode::scaled ? "scaled" : "1/sqrt(tau+2)"},
                 {"strip_width", width.to_string()},
                 {"strip_threshold", threshold.to_string()},
                 {"strip_containable", width < threshold},
                 {"contained_at_offset", in_strip}};
  if (!a.svg.empty()) {
    std::ofstream f(a.svg, std::ios::binary);
    if (!f) throw UsageError("lift: cannot write " + a.svg);
    f << render_lift_svg(w, offset);
    rec.parameters["svg"] = a.svg;
  }
  out << rec.dump();
  return exit_code::ok;
}

int cmd_render(const RenderArgs& a, std::ostream& out) {
  const GoldenNumber seed = parse_seed(a.seed);
  const Covering c = grow(seed, a.length, a.left, geometry_from(a.w));
  const std::string svg = render_svg(c);
  if (a.output.empty()) {
    out << svg;
  } else {
    std::ofstream f(a.output, std::ios::binary);
    if (!f) throw UsageError("render: cannot write " + a.output);
    f << svg;
  }
  return exit_code::ok;
}

int cmd_selftest(const SelftestArgs& a, std::ostream& out) {
  SelftestOptions opts;
  opts.max_len = a.max_len.value_or(a.quick ? 8 : 12);
  opts.inject_fault = a.inject_fault;
  const SelftestResult r = run_selftest(opts, out);
  if (!r.ok) {
    out << "first counterexample: " << r.counterexample << "\n";
    return exit_code::failure;
  }
  return exit_code::ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Growth of Fibonacci coverings with locally adjusted string decorations",
               "quasigrow"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  GrowArgs grow_args;
  auto* grow_cmd = app.add_subcommand("grow", "Grow a covering from a seed string height");
  grow_cmd->add_option("--seed", grow_args.seed, "Seed alpha height, e.g. \"1\" or \"-1 + 1t\"")
      ->required();
  grow_cmd->add_option("--length", grow_args.length, "Attachments on the right");
  grow_cmd->add_option("--left", grow_args.left, "Attachments on the left");
  grow_cmd->add_option("--format", grow_args.format)
      ->check(CLI::IsMember({"letters", "json", "svg"}));
  grow_cmd->add_option("--w", grow_args.w, "Overlap width (default 1/(2 tau))");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check a word against the factor oracles");
  verify_cmd->add_option("word", verify_args.word, "Word over {A,B}")->required();
  verify_cmd->add_option("--format", verify_args.format)->check(CLI::IsMember({"text", "json"}));

  DeceptionArgs dec_args;
  auto* dec_cmd = app.add_subcommand("deceptions", "Enumerate deceptions of a window rule");
  dec_cmd->add_option("--window", dec_args.window, "Window length r")
      ->required();
  dec_cmd->add_option("--max-len", dec_args.max_len, "Longest word to enumerate")->required();
  dec_cmd->add_option("--min-len", dec_args.min_len, "Shortest word to enumerate");
  dec_cmd->add_option("--demo-trials", dec_args.demo_trials, "Random growth trials");
  dec_cmd->add_option("--rng-seed", dec_args.rng_seed, "Seed for the growth demo");
  dec_cmd->add_option("--demo-max-len", dec_args.demo_max_len, "Length of each growth trial");
  dec_cmd->add_option("--format", dec_args.format)->check(CLI::IsMember({"table", "json"}));

  LiftArgs lift_args;
  auto* lift_cmd = app.add_subcommand("lift", "Lift a word to the square lattice");
  lift_cmd->add_option("word", lift_args.word, "Word over {A,B}")->required();
  lift_cmd->add_option("--mode", lift_args.mode)->check(CLI::IsMember({"scaled", "geometric"}));
  lift_cmd->add_option("--offset", lift_args.offset, "Starting perpendicular coordinate");
  lift_cmd->add_option("--svg", lift_args.svg, "Also write the staircase and strip as SVG");

  RenderArgs render_args;
  auto* render_cmd = app.add_subcommand("render", "Write the SVG of a grown covering");
  render_cmd->add_option("--seed", render_args.seed)->required();
  render_cmd->add_option("--length", render_args.length);
  render_cmd->add_option("--left", render_args.left);
  render_cmd->add_option("--w", render_args.w);
  render_cmd->add_option("-o,--output", render_args.output, "Output file (default stdout)");

  SelftestArgs self_args;
  auto* self_cmd = app.add_subcommand("selftest", "Run the built-in oracle agreement suite");
  self_cmd->add_flag("--quick", self_args.quick, "Words up to length 8 only");
  self_cmd->add_option("--max-len", self_args.max_len);
  self_cmd->add_flag("--inject-fault", self_args.inject_fault,
                     "Perturb the B alpha domain; the suite must fail");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code::parse_error;
  }

  try {
    if (*grow_cmd) return cmd_grow(grow_args, out);
    if (*verify_cmd) return cmd_verify(verify_args, out, err);
    if (*dec_cmd) return cmd_deceptions(dec_args, out);
    if (*lift_cmd) return cmd_lift(lift_args, out);
    if (*render_cmd) return cmd_render(render_args, out);
    if (*self_cmd) return cmd_selftest(self_args, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::parse_error;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::parse_error;
  } catch (const OutOfRange& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::out_of_range;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return exit_code::inconsistent;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::budget_exceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::parse_error;
  }
  return exit_code::failure;
}

}  // namespace quasigrow
