#pragma once

// Conventional local growth rules with fixed decorations: a rule of window r
// accepts a word iff every contiguous window of length min(r, |w|) is a
// factor. A deception is a word such a rule accepts that is not a factor.

#include "quasigrow/words.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace quasigrow {

inline constexpr std::size_t kDefaultEnumerationBudget = 24;
inline constexpr std::size_t kMaxWindow = 16;

class BudgetExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

class WindowRule {
 public:
  explicit WindowRule(std::size_t r);

  std::size_t window() const { return r_; }
  /// Every window of length min(r, |w|) is a factor.
  bool allows(std::span<const Letter> w) const;
  /// Whether appending a letter keeps w allowed, given that w already is.
  bool allows_append(std::span<const Letter> w, Letter next) const;

 private:
  std::size_t r_;
  FactorIndex index_;
};

struct DeceptionReport {
  Word word;
  std::size_t window = 0;
  std::optional<std::size_t> composition_depth_to_bb;
  /// All windows of length min(r, |w|) were re-checked as factors.
  bool witness_windows = false;

  bool b_at_both_ends() const {
    return !word.empty() && word.front() == Letter::B && word.back() == Letter::B;
  }
};

/// Composition depth cap used for reports.
inline constexpr std::size_t kReportDepthCap = 64;

bool is_deception(std::span<const Letter> w, std::size_t r);

/// All length-L deceptions for window r in lexicographic order (A < B).
/// Throws BudgetExceeded when L > budget.
std::vector<DeceptionReport> enumerate_deceptions(std::size_t length, std::size_t r,
                                                  std::size_t budget = kDefaultEnumerationBudget);

/// Smallest length with a deception for window r. r <= kMaxWindow; throws
/// BudgetExceeded if nothing turns up within the budget.
std::size_t min_deception_length(std::size_t r, std::size_t budget = kDefaultEnumerationBudget);

struct GrowthStatistics {
  std::size_t trials = 0;
  /// Trials whose word stopped being a factor before reaching max_len.
  std::size_t failures = 0;
  /// Trials where no letter was acceptable (a subset of failures).
  std::size_t stuck = 0;
  /// Mean length at which the word first left the factor set, over failures.
  double mean_failure_length = 0.0;

  double failure_fraction() const {
    return trials == 0 ? 0.0 : static_cast<double>(failures) / static_cast<double>(trials);
  }
};

/// Grows by appending a uniformly random acceptable letter under a window-r
/// rule, never removing tiles. Reproducible from rng_seed.
GrowthStatistics greedy_growth_failure_demo(std::size_t r, std::size_t trials, std::size_t max_len,
                                            std::uint64_t rng_seed);

/// Same harness driven by the covering grower from random exact grid seeds.
GrowthStatistics covering_growth_failure_demo(std::size_t trials, std::size_t max_len,
                                              std::uint64_t rng_seed);

}  // namespace quasigrow
