#include "quasigrow/selftest.hpp"

#include "quasigrow/covering.hpp"
#include "quasigrow/hyperlift.hpp"
#include "quasigrow/words.hpp"

#include <algorithm>

namespace quasigrow {

namespace {

bool ends_with(const Word& w, std::string_view tail) {
  return to_string(w).ends_with(tail);
}

bool within(const GoldenInterval& inner, const GoldenInterval& outer) {
  return inner.is_empty() || interval_intersect(inner, outer) == inner;
}

class Suite {
 public:
  Suite(SelftestResult& result, std::ostream& log) : result_(result), log_(log) {}

  bool check(bool cond, const std::string& what) {
    ++result_.checks;
    if (!cond && result_.ok) {
      result_.ok = false;
      result_.counterexample = what;
      log_ << "FAIL " << what << "\n";
    }
    return cond;
  }
  bool ok() const { return result_.ok; }

 private:
  SelftestResult& result_;
  std::ostream& log_;
};

}  // namespace

SelftestResult run_selftest(const SelftestOptions& opts, std::ostream& log) {
  SelftestResult result;
  Suite s(result, log);

  DomainSet domains = DomainSet::standard();
  if (opts.inject_fault) {
    domains.b_alpha = GoldenInterval(0, golden::inv_tau(), true, true);
  }

  // Alpha domains partition [0, tau).
  s.check(interval_intersect(domains.a_alpha, domains.b_alpha).is_empty(),
          "alpha domains overlap: " + domains.a_alpha.to_string() + " and " +
              domains.b_alpha.to_string());
  s.check(domains.b_alpha.lo() == 0 && domains.b_alpha.closed_lo() &&
              domains.b_alpha.hi() == domains.a_alpha.lo() &&
              domains.b_alpha.closed_hi() != domains.a_alpha.closed_lo() &&
              domains.a_alpha.hi() == golden::tau() && !domains.a_alpha.closed_hi(),
          "alpha domains do not tile [0, tau)");
  log << "domain partition: " << (s.ok() ? "ok" : "FAILED") << "\n";

  // Exhaustive three-way agreement and forcing bounds over every word.
  const GoldenInterval after_aa = GoldenInterval::half_open(0, golden::inv_tau2());
  const GoldenInterval after_ababa = GoldenInterval::half_open(golden::two_inv_tau2(), golden::tau());
  std::size_t words = 0;
  for (std::size_t n = 1; n <= opts.max_len && s.ok(); ++n) {
    for (std::uint32_t code = 0; code < (std::uint32_t{1} << n) && s.ok(); ++code) {
      Word w(n);
      for (std::size_t i = 0; i < n; ++i) {
        w[i] = static_cast<Letter>((code >> (n - 1 - i)) & 1U);
      }
      ++words;
      const bool by_interval = !feasible_interval(w, domains).is_empty();
      const bool by_substring = is_factor_substring(w);
      const bool by_strip = strip_containable(w);
      if (!s.check(by_interval == by_substring && by_substring == by_strip,
                   "factor oracles disagree on " + to_string(w))) {
        break;
      }
      if (!by_interval) continue;
      const GoldenInterval boundary = boundary_interval(w, domains);
      if (ends_with(w, "AA")) {
        s.check(within(boundary, after_aa), "boundary after " + to_string(w) + " is " +
                                                boundary.to_string() + ", not below 1/tau^2");
        s.check(!can_attach(boundary.lo(), Letter::A, Side::right, domains) &&
                    can_attach(boundary.lo(), Letter::B, Side::right, domains),
                "AA does not force B after " + to_string(w));
      }
      if (ends_with(w, "ABABA")) {
        s.check(within(boundary, after_ababa), "boundary after " + to_string(w) + " is " +
                                                   boundary.to_string() + ", not above 2/tau^2");
        s.check(can_attach(boundary.lo(), Letter::A, Side::right, domains) &&
                    !can_attach(boundary.lo(), Letter::B, Side::right, domains),
                "ABABA does not force A after " + to_string(w));
      }
    }
  }
  log << "exhaustive words checked: " << words << " (n <= " << opts.max_len << ")\n";

  // Left and right attachment invert each other on a grid of seeds.
  for (long long k = 0; k < 200 && s.ok(); ++k) {
    const GoldenNumber y = GoldenNumber::from_parts(0, k, 200);
    const auto [lr, yr] = step_right(y, domains);
    const auto [ll, yl] = step_left(yr, domains);
    s.check(ll == lr && yl == y, "step_left(step_right(" + y.to_string() + ")) != identity");
  }

  log << (s.ok() ? "selftest: ok" : "selftest: FAILED") << " (" << result.checks << " checks)\n";
  return result;
}

}  // namespace quasigrow
