#include "quasigrow/deceptions.hpp"

#include "quasigrow/covering.hpp"

#include <algorithm>
#include <future>
#include <memory>
#include <random>
#include <string>

namespace quasigrow {

WindowRule::WindowRule(std::size_t r) : r_(r), index_(r) {
  if (r == 0) throw std::invalid_argument("WindowRule: window must be at least 1");
}

bool WindowRule::allows(std::span<const Letter> w) const {
  const std::size_t n = std::min(r_, w.size());
  for (std::size_t i = 0; i + n <= w.size(); ++i) {
    if (!index_.contains(w.subspan(i, n))) return false;
    if (n == 0) break;
  }
  return true;
}

bool WindowRule::allows_append(std::span<const Letter> w, Letter next) const {
  const std::size_t n = std::min(r_, w.size() + 1);
  std::uint32_t code = FactorIndex::encode(w.last(n - 1));
  code = (code << 1) | static_cast<std::uint32_t>(next);
  return index_.contains(code, n);
}

bool is_deception(std::span<const Letter> w, std::size_t r) {
  return !is_factor(w) && WindowRule(r).allows(w);
}

namespace {

struct Enumerator {
  const WindowRule& rule;
  const FactorIndex& full;  // factors of the target length
  std::size_t length;
  Word word;
  std::vector<Word> found;

  void run() {
    if (word.size() == length) {
      if (!full.contains(word)) found.push_back(word);
      return;
    }
    for (Letter l : {Letter::A, Letter::B}) {
      if (!rule.allows_append(word, l)) continue;
      word.push_back(l);
      run();
      word.pop_back();
    }
  }
};

DeceptionReport make_report(Word w, std::size_t r, const WindowRule& rule) {
  DeceptionReport rep;
  rep.window = r;
  rep.composition_depth_to_bb = deflation_illegality_depth(w, kReportDepthCap);
  rep.witness_windows = rule.allows(w);
  rep.word = std::move(w);
  return rep;
}

}  // namespace

std::vector<DeceptionReport> enumerate_deceptions(std::size_t length, std::size_t r,
                                                  std::size_t budget) {
  if (length > budget) {
    throw BudgetExceeded("enumerate_deceptions: length " + std::to_string(length) +
                         " exceeds budget " + std::to_string(budget));
  }
  if (r > kMaxWindow) {
    throw BudgetExceeded("enumerate_deceptions: window " + std::to_string(r) + " exceeds " +
                         std::to_string(kMaxWindow));
  }
  std::vector<DeceptionReport> out;
  if (length == 0) return out;

  const WindowRule rule(r);
  const FactorIndex full(length);

  // Shard on legal prefixes; each shard walks its own subtree and shards are
  // concatenated in prefix order, which keeps the output lexicographic.
  const std::size_t prefix_len = std::min<std::size_t>(4, length);
  std::vector<Word> prefixes{Word{}};
  for (std::size_t k = 0; k < prefix_len; ++k) {
    std::vector<Word> next;
    for (const Word& p : prefixes) {
      for (Letter l : {Letter::A, Letter::B}) {
        if (!rule.allows_append(p, l)) continue;
        next.push_back(p);
        next.back().push_back(l);
      }
    }
    prefixes = std::move(next);
  }

  std::vector<std::future<std::vector<Word>>> shards;
  shards.reserve(prefixes.size());
  for (const Word& p : prefixes) {
    shards.push_back(std::async(std::launch::async, [&rule, &full, length, p] {
      Enumerator e{rule, full, length, p, {}};
      e.run();
      return std::move(e.found);
    }));
  }
  for (auto& s : shards) {
    for (Word& w : s.get()) out.push_back(make_report(std::move(w), r, rule));
  }
  return out;
}

std::size_t min_deception_length(std::size_t r, std::size_t budget) {
  if (r > kMaxWindow) {
    throw BudgetExceeded("min_deception_length: window " + std::to_string(r) + " exceeds " +
                         std::to_string(kMaxWindow));
  }
  for (std::size_t len = 1; len <= budget; ++len) {
    if (!enumerate_deceptions(len, r, budget).empty()) return len;
  }
  throw BudgetExceeded("min_deception_length: no deception up to length " + std::to_string(budget));
}

namespace {

// Tracks whether the word grown so far is still a factor, one letter at a
// time, via the set of boundary heights compatible with it.
class FactorTracker {
 public:
  bool push(Letter l) {
    if (current_.is_empty()) return false;
    current_ = interval_intersect(current_, DomainSet::standard().alpha(l));
    if (!current_.is_empty()) current_ = current_.shifted(step_of(l));
    return !current_.is_empty();
  }

 private:
  GoldenInterval current_ = height_range();
};

// A source yields the next letter for the current trial, or nothing if stuck.
template <class Source>
GrowthStatistics run_trials(std::size_t trials, std::size_t max_len, std::mt19937_64& rng,
                            Source&& make_source) {
  GrowthStatistics st;
  st.trials = trials;
  double failure_length_sum = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    auto next_letter = make_source(rng);
    FactorTracker tracker;
    bool failed = false;
    Word word;
    word.reserve(max_len);
    // Growth never removes tiles, so once the word stops being a factor it
    // stays wrong; keep going only to see whether the rule gets stuck.
    while (word.size() < max_len) {
      const std::optional<Letter> l = next_letter(word, rng);
      if (!l) {
        ++st.stuck;
        break;
      }
      word.push_back(*l);
      if (!failed && !tracker.push(*l)) {
        failed = true;
        ++st.failures;
        failure_length_sum += static_cast<double>(word.size());
      }
    }
  }
  if (st.failures > 0) st.mean_failure_length = failure_length_sum / static_cast<double>(st.failures);
  return st;
}

}  // namespace

GrowthStatistics greedy_growth_failure_demo(std::size_t r, std::size_t trials, std::size_t max_len,
                                            std::uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  const WindowRule rule(r);
  return run_trials(trials, max_len, rng, [&rule](std::mt19937_64&) {
    return [&rule](const Word& w, std::mt19937_64& g) -> std::optional<Letter> {
      const bool a_ok = rule.allows_append(w, Letter::A);
      const bool b_ok = rule.allows_append(w, Letter::B);
      if (a_ok && b_ok) return (g() >> 63) == 0 ? Letter::A : Letter::B;
      if (a_ok) return Letter::A;
      if (b_ok) return Letter::B;
      return std::nullopt;
    };
  });
}

GrowthStatistics covering_growth_failure_demo(std::size_t trials, std::size_t max_len,
                                              std::uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  return run_trials(trials, max_len, rng, [](std::mt19937_64& g) {
    // Seed on the exact grid k*tau/1000.
    const auto k = static_cast<long long>(g() % 1000);
    auto grower = std::make_shared<Grower>(GoldenNumber::from_parts(0, k, 1000), Side::right);
    return [grower](const Word&, std::mt19937_64&) -> std::optional<Letter> {
      return grower->next().first;
    };
  });
}

}  // namespace quasigrow
