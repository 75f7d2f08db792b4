#include "quasigrow/words.hpp"

#include "quasigrow/covering.hpp"

#include <algorithm>
#include <cmath>

namespace quasigrow {

std::string to_string(std::span<const Letter> w) {
  std::string s;
  s.reserve(w.size());
  for (Letter l : w) s.push_back(to_char(l));
  return s;
}

Word parse_word(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    if (c == 'A') {
      w.push_back(Letter::A);
    } else if (c == 'B') {
      w.push_back(Letter::B);
    } else {
      throw ParseError("word: unexpected character '" + std::string(1, c) + "', alphabet is {A,B}");
    }
  }
  return w;
}

std::size_t count(std::span<const Letter> w, Letter l) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), l));
}

Word substitute(std::span<const Letter> w) {
  Word out;
  out.reserve(2 * w.size());
  for (Letter l : w) {
    out.push_back(Letter::A);
    if (l == Letter::A) out.push_back(Letter::B);
  }
  return out;
}

Word fibonacci_word(std::size_t n) {
  Word w{Letter::A};
  while (w.size() < n) w = substitute(w);
  w.resize(n);
  return w;
}

namespace {

bool has_bb(std::span<const Letter> w) {
  return std::adjacent_find(w.begin(), w.end(), [](Letter a, Letter b) {
           return a == Letter::B && b == Letter::B;
         }) != w.end();
}

}  // namespace

ParseResult compose(std::span<const Letter> w) {
  if (has_bb(w)) throw ContainsBB();
  ParseResult r;
  std::size_t i = 0;
  if (!w.empty() && w[0] == Letter::B) {
    // Tail of an AB block whose A lies off the word; the block still
    // composes to A.
    r.leading_flag = true;
    r.composed.push_back(Letter::A);
    i = 1;
  }
  // Past the first letter every B directly follows an A that consumes it.
  while (i < w.size()) {
    if (i + 1 == w.size()) {
      r.trailing_flag = true;
      break;
    }
    if (w[i + 1] == Letter::B) {
      r.composed.push_back(Letter::A);
      i += 2;
    } else {
      r.composed.push_back(Letter::B);
      i += 1;
    }
  }
  return r;
}

std::optional<std::size_t> deflation_illegality_depth(std::span<const Letter> w,
                                                      std::size_t max_depth) {
  Word cur(w.begin(), w.end());
  for (std::size_t depth = 0;; ++depth) {
    if (has_bb(cur)) return depth;
    if (depth == max_depth || cur.empty()) return std::nullopt;
    cur = compose(cur).composed;
  }
}

bool is_factor_substring(std::span<const Letter> w) {
  if (w.empty()) return true;
  const Word text = fibonacci_word(oracle_prefix_length(w.size()));
  return std::search(text.begin(), text.end(), w.begin(), w.end()) != text.end();
}

bool is_factor(std::span<const Letter> w) {
  const bool by_interval = !feasible_interval(w).is_empty();
  const bool by_substring = is_factor_substring(w);
  if (by_interval != by_substring) {
    throw InternalInconsistency("factor oracles disagree on " + to_string(w));
  }
  return by_interval;
}

std::set<Word> factor_set(std::size_t n) {
  std::set<Word> out;
  if (n == 0) {
    out.insert(Word{});
    return out;
  }
  const Word text = fibonacci_word(oracle_prefix_length(n));
  for (std::size_t i = 0; i + n <= text.size(); ++i) {
    out.emplace(text.begin() + static_cast<std::ptrdiff_t>(i),
                text.begin() + static_cast<std::ptrdiff_t>(i + n));
  }
  return out;
}

FactorIndex::FactorIndex(std::size_t max_len) {
  if (max_len > 30) throw std::invalid_argument("FactorIndex: max_len above 30");
  tables_.resize(max_len + 1);
  tables_[0] = std::vector<bool>(1, true);
  const Word text = fibonacci_word(oracle_prefix_length(max_len));
  for (std::size_t n = 1; n <= max_len; ++n) {
    auto& table = tables_[n];
    table.assign(std::size_t{1} << n, false);
    const std::uint32_t mask = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
    std::uint32_t code = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      code = ((code << 1) | static_cast<std::uint32_t>(text[i])) & mask;
      if (i + 1 >= n) table[code] = true;
    }
  }
}

bool FactorIndex::contains(std::span<const Letter> w) const {
  if (w.size() > max_len()) throw std::out_of_range("FactorIndex: word longer than index");
  return contains(encode(w), w.size());
}

std::size_t FactorIndex::count(std::size_t n) const {
  const auto& t = tables_.at(n);
  return static_cast<std::size_t>(std::count(t.begin(), t.end(), true));
}

std::uint32_t FactorIndex::encode(std::span<const Letter> w) {
  std::uint32_t code = 0;
  for (Letter l : w) code = (code << 1) | static_cast<std::uint32_t>(l);
  return code;
}

RotationCoding rotation_coding(const GoldenNumber& step_a, const GoldenNumber& step_b,
                               const GoldenNumber& width, const GoldenNumber& y0,
                               std::size_t n) {
  if (step_a.sign() != Sign::negative || step_b.sign() != Sign::positive) {
    throw DegenerateParameters("rotation coding: need step_a < 0 < step_b");
  }
  if (width != step_b - step_a) {
    throw DegenerateParameters("rotation coding: width must equal step_b - step_a");
  }
  if (y0.sign() == Sign::negative || y0 >= width) {
    throw DegenerateParameters("rotation coding: y0 outside [0, width)");
  }
  RotationCoding out;
  out.periodic = (step_a / step_b).is_rational();
  out.word.reserve(n);
  const GoldenNumber threshold = -step_a;
  GoldenNumber y = y0;
  for (std::size_t i = 0; i < n; ++i) {
    if (y >= threshold) {
      out.word.push_back(Letter::A);
      y += step_a;
    } else {
      out.word.push_back(Letter::B);
      y += step_b;
    }
  }
  return out;
}

RotationCoding rotation_coding(double step_a, double step_b, double width, double y0,
                               std::size_t n) {
  if (!(step_a < 0.0) || !(step_b > 0.0)) {
    throw DegenerateParameters("rotation coding: need step_a < 0 < step_b");
  }
  if (std::abs(width - (step_b - step_a)) > 1e-12) {
    throw DegenerateParameters("rotation coding: width must equal step_b - step_a");
  }
  if (!(y0 >= 0.0) || !(y0 < width)) {
    throw DegenerateParameters("rotation coding: y0 outside [0, width)");
  }
  RotationCoding out;
  out.approximate = true;
  out.word.reserve(n);
  double y = y0;
  for (std::size_t i = 0; i < n; ++i) {
    if (y >= -step_a) {
      out.word.push_back(Letter::A);
      y += step_a;
    } else {
      out.word.push_back(Letter::B);
      y += step_b;
    }
  }
  return out;
}

}  // namespace quasigrow
