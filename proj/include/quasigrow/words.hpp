#pragma once

// Symbolic layer: the two-letter alphabet, the Fibonacci substitution and its
// composition inverse, factor oracles, and rotation codings.

#include "quasigrow/golden.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace quasigrow {

/// A is the long tile, B the short one.
enum class Letter : std::uint8_t { A = 0, B = 1 };

using Word = std::vector<Letter>;

inline char to_char(Letter l) { return l == Letter::A ? 'A' : 'B'; }

std::string to_string(std::span<const Letter> w);
/// Throws ParseError on anything outside {A, B}.
Word parse_word(std::string_view text);

std::size_t count(std::span<const Letter> w, Letter l);

class ContainsBB : public std::invalid_argument {
 public:
  ContainsBB() : std::invalid_argument("word contains the forbidden segment BB") {}
};

/// Raised when independent factor oracles disagree. Never expected.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DegenerateParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A -> AB, B -> A.
Word substitute(std::span<const Letter> w);

/// First n letters of the fixed point A, AB, ABA, ABAAB, ...
Word fibonacci_word(std::size_t n);

struct ParseResult {
  Word composed;
  /// A leading B was read as the tail of an AB block starting off-word; it
  /// contributes the first A of composed.
  bool leading_flag = false;
  /// A trailing A could be either a block of its own or the head of AB.
  bool trailing_flag = false;
};

/// Composition AB -> A, A -> B. A trailing lone A is left out since it may be
/// the head of an AB block. Throws ContainsBB.
ParseResult compose(std::span<const Letter> w);

/// Smallest k <= max_depth such that composing k times exposes BB, if any.
/// Only a necessary condition for illegality: the edges shrink each round.
std::optional<std::size_t> deflation_illegality_depth(std::span<const Letter> w,
                                                      std::size_t max_depth);

/// Length of the generated prefix the substring oracle searches for a word of
/// length n.
inline std::size_t oracle_prefix_length(std::size_t n) { return 20 * n + 100; }

bool is_factor_substring(std::span<const Letter> w);

/// True iff w occurs in the infinite Fibonacci word. Decided by the exact
/// feasible-interval test and cross-checked against substring search; throws
/// InternalInconsistency if the two disagree.
bool is_factor(std::span<const Letter> w);

/// All distinct length-n factors, in lexicographic order (A < B).
std::set<Word> factor_set(std::size_t n);

/// Bit-packed factor lookup for every length up to max_len. Letters encode as
/// A = 0, B = 1, first letter most significant.
class FactorIndex {
 public:
  explicit FactorIndex(std::size_t max_len);

  std::size_t max_len() const { return tables_.size() - 1; }
  bool contains(std::uint32_t code, std::size_t n) const { return tables_.at(n)[code]; }
  bool contains(std::span<const Letter> w) const;
  std::size_t count(std::size_t n) const;

  static std::uint32_t encode(std::span<const Letter> w);

 private:
  std::vector<std::vector<bool>> tables_;
};

struct RotationCoding {
  Word word;
  /// The step ratio is rational, so the coding is eventually periodic.
  bool periodic = false;
  /// Parameters were floating point; the letters are only as good as the rounding.
  bool approximate = false;
};

/// Two-interval coding of the circle rotation y -> y + step_b (mod width),
/// with letter A on [-step_a, width) followed by the step step_a < 0, and
/// letter B on [0, -step_a) followed by step_b > 0. Requires
/// width = step_b - step_a and 0 <= y0 < width, else DegenerateParameters.
RotationCoding rotation_coding(const GoldenNumber& step_a, const GoldenNumber& step_b,
                               const GoldenNumber& width, const GoldenNumber& y0,
                               std::size_t n);

/// Floating-point variant for parameters outside Q(tau); always approximate.
/// Width must match step_b - step_a to within 1e-12.
RotationCoding rotation_coding(double step_a, double step_b, double width, double y0,
                               std::size_t n);

}  // namespace quasigrow
