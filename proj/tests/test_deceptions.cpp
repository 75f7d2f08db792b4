#include <doctest.h>

#include "quasigrow/covering.hpp"
#include "quasigrow/deceptions.hpp"

#include <algorithm>
#include <string>

using namespace quasigrow;

namespace {

Word W(const char* s) { return parse_word(s); }

std::string fib_text() {
  std::string prev = "A", cur = "AB";
  while (cur.size() < 5000) {
    std::string next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Brute force straight from the definition, on strings.
std::vector<std::string> brute_deceptions(std::size_t len, std::size_t r) {
  static const std::string text = fib_text();
  const auto factor = [](const std::string& s) { return text.find(s) != std::string::npos; };
  const std::size_t win = std::min(r, len);
  std::vector<std::string> out;
  for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
    std::string s(len, 'A');
    for (std::size_t i = 0; i < len; ++i) {
      if ((bits >> (len - 1 - i)) & 1u) s[i] = 'B';
    }
    if (factor(s)) continue;
    bool legal = true;
    for (std::size_t i = 0; i + win <= len && legal; ++i) legal = factor(s.substr(i, win));
    if (legal) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("window rule") {
  const WindowRule r2(2);
  CHECK(r2.allows(W("AAA")));
  CHECK_FALSE(r2.allows(W("ABB")));
  CHECK(r2.allows(W("A")));
  CHECK(r2.allows_append(W("AA"), Letter::A));
  CHECK_FALSE(r2.allows_append(W("AB"), Letter::B));
  const WindowRule r3(3);
  CHECK_FALSE(r3.allows(W("AAA")));
  CHECK_THROWS(WindowRule(0));
}

TEST_CASE("is_deception") {
  CHECK(is_deception(W("AAA"), 2));
  CHECK_FALSE(is_deception(W("BB"), 2));
  for (std::size_t r = 1; r <= 8; ++r) CHECK_FALSE(is_deception(W("ABAAB"), r));
  CHECK(is_deception(W("BB"), 1));
  CHECK(is_deception(W("BABAABABAABAB"), 12));
}

TEST_CASE("enumerate_deceptions") {
  SUBCASE("length 3, window 2") {
    const auto d = enumerate_deceptions(3, 2);
    REQUIRE(d.size() == 1);
    CHECK(to_string(d[0].word) == "AAA");
    CHECK(d[0].composition_depth_to_bb == 1u);
    CHECK(d[0].witness_windows);
    CHECK(d[0].window == 2);
  }
  SUBCASE("length 2, window 2") { CHECK(enumerate_deceptions(2, 2).empty()); }
  SUBCASE("ABABAB under window 5") {
    const auto d = enumerate_deceptions(6, 5);
    const bool listed = std::any_of(d.begin(), d.end(), [](const DeceptionReport& r) {
      return r.word == W("ABABAB");
    });
    CHECK(listed == (is_factor(W("ABABA")) && is_factor(W("BABAB"))));
  }
  SUBCASE("length 13, window 12") {
    const auto d = enumerate_deceptions(13, 12);
    REQUIRE_FALSE(d.empty());
    const bool landmark = std::any_of(d.begin(), d.end(), [](const DeceptionReport& r) {
      return r.b_at_both_ends() && r.composition_depth_to_bb == 4u;
    });
    CHECK(landmark);
  }
  SUBCASE("agrees with brute force") {
    for (std::size_t len = 1; len <= 12; ++len) {
      for (std::size_t r = 1; r <= 6; ++r) {
        std::vector<std::string> got;
        for (const auto& d : enumerate_deceptions(len, r)) got.push_back(to_string(d.word));
        CHECK(got == brute_deceptions(len, r));
      }
    }
  }
  SUBCASE("budget") {
    CHECK_THROWS_AS(enumerate_deceptions(25, 12), BudgetExceeded);
    CHECK_THROWS_AS(enumerate_deceptions(10, 3, 8), BudgetExceeded);
  }
}

TEST_CASE("reports are sound") {
  for (std::size_t r = 1; r <= 10; ++r) {
    const std::size_t len = min_deception_length(r);
    for (std::size_t l = len; l <= std::min<std::size_t>(len + 2, 20); ++l) {
      for (const auto& d : enumerate_deceptions(l, r)) {
        CHECK_FALSE(is_factor_substring(d.word));
        CHECK(feasible_interval(d.word).is_empty());
        const std::size_t win = std::min(r, d.word.size());
        for (std::size_t i = 0; i + win <= d.word.size(); ++i) {
          const std::span<const Letter> sub(d.word.data() + i, win);
          CHECK(is_factor_substring(sub));
          CHECK_FALSE(feasible_interval(sub).is_empty());
        }
      }
    }
  }
}

TEST_CASE("min_deception_length") {
  CHECK(min_deception_length(1) == 2);
  CHECK(min_deception_length(2) == 3);
  CHECK(min_deception_length(12) <= 13);
  for (std::size_t r = 1; r <= 10; ++r) {
    const std::size_t len = min_deception_length(r);
    CHECK(len > r);
    CHECK_FALSE(enumerate_deceptions(len, r).empty());
    if (len > 1) CHECK(enumerate_deceptions(len - 1, r).empty());
  }
  CHECK_THROWS_AS(min_deception_length(kMaxWindow + 1), BudgetExceeded);
}

TEST_CASE("growth failure demos") {
  SUBCASE("greedy window-2 growth goes wrong") {
    const GrowthStatistics s = greedy_growth_failure_demo(2, 10000, 50, 42);
    CHECK(s.trials == 10000);
    CHECK(s.failure_fraction() > 0.0);
    CHECK(s.mean_failure_length >= 3.0);
    CHECK(s.stuck <= s.failures);
  }
  SUBCASE("no deception within reach means no failure") {
    // Window 10 has no deception shorter than min_deception_length(10).
    const std::size_t reach = min_deception_length(10) - 1;
    const GrowthStatistics s = greedy_growth_failure_demo(10, 500, reach, 1);
    CHECK(s.failures == 0);
  }
  SUBCASE("covering growth never fails") {
    const GrowthStatistics s = covering_growth_failure_demo(2000, 200, 5);
    CHECK(s.trials == 2000);
    CHECK(s.failures == 0);
    CHECK(s.stuck == 0);
  }
  SUBCASE("no trials") {
    const GrowthStatistics s = greedy_growth_failure_demo(2, 0, 50, 1);
    CHECK(s.trials == 0);
    CHECK(s.failures == 0);
    CHECK(s.failure_fraction() == 0.0);
  }
  SUBCASE("reproducible") {
    const GrowthStatistics a = greedy_growth_failure_demo(3, 500, 40, 9);
    const GrowthStatistics b = greedy_growth_failure_demo(3, 500, 40, 9);
    CHECK(a.failures == b.failures);
    CHECK(a.stuck == b.stuck);
    CHECK(a.mean_failure_length == b.mean_failure_length);
  }
}
