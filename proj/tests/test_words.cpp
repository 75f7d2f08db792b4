#include <doctest.h>

#include "quasigrow/words.hpp"

#include <cmath>
#include <string>

using namespace quasigrow;

namespace {

Word W(const char* s) { return parse_word(s); }

// Fibonacci strings by concatenation, S_k = S_{k-1} S_{k-2}; independent of substitute().
std::string fib_concat(std::size_t min_len) {
  std::string prev = "A", cur = "AB";
  while (cur.size() < min_len) {
    std::string next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Word word_from_bits(std::uint32_t bits, std::size_t n) {
  Word w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = ((bits >> (n - 1 - i)) & 1u) ? Letter::B : Letter::A;
  }
  return w;
}

}  // namespace

TEST_CASE("parse and print") {
  CHECK(to_string(W("ABAAB")) == "ABAAB");
  CHECK(W("").empty());
  CHECK_THROWS_AS(parse_word("ABC"), ParseError);
  CHECK_THROWS_AS(parse_word("ab"), ParseError);
}

TEST_CASE("substitute") {
  CHECK(to_string(substitute(W("A"))) == "AB");
  CHECK(to_string(substitute(W("B"))) == "A");
  CHECK(to_string(substitute(W("ABAAB"))) == "ABAABABA");
  CHECK(substitute(W("")).empty());
}

TEST_CASE("fibonacci_word") {
  CHECK(to_string(fibonacci_word(1)) == "A");
  CHECK(to_string(fibonacci_word(5)) == "ABAAB");
  const Word w13 = fibonacci_word(13);
  CHECK(to_string(w13) == "ABAABABAABAAB");
  CHECK(count(w13, Letter::A) == 8);
  CHECK(count(w13, Letter::B) == 5);
  CHECK(to_string(fibonacci_word(5000)) == fib_concat(5000).substr(0, 5000));
}

TEST_CASE("Fibonacci letter counts") {
  std::size_t f[22] = {0, 1};
  for (int k = 2; k < 22; ++k) f[k] = f[k - 1] + f[k - 2];
  const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
  for (int k = 4; k <= 20; ++k) {
    const Word w = fibonacci_word(f[k]);
    const std::size_t a = count(w, Letter::A);
    const std::size_t b = count(w, Letter::B);
    CHECK(a == f[k - 1]);
    CHECK(b == f[k - 2]);
    CHECK(std::abs(double(a) / double(b) - tau) < 2.0 / double(b));
  }
}

TEST_CASE("compose") {
  ParseResult r = compose(W("ABAAB"));
  CHECK(to_string(r.composed) == "ABA");
  CHECK_FALSE(r.leading_flag);
  CHECK_FALSE(r.trailing_flag);

  r = compose(W("AAA"));
  CHECK(to_string(r.composed) == "BB");
  CHECK(r.trailing_flag);

  r = compose(W("BAB"));
  CHECK(to_string(r.composed) == "AA");
  CHECK(r.leading_flag);
  CHECK_FALSE(r.trailing_flag);

  CHECK_THROWS_AS(compose(W("BB")), ContainsBB);
  CHECK_THROWS_AS(compose(W("ABBA")), ContainsBB);
  CHECK(compose(W("")).composed.empty());
}

TEST_CASE("composition inverts substitution on unflagged factors") {
  for (std::size_t n = 1; n <= 15; ++n) {
    for (const Word& w : factor_set(n)) {
      const ParseResult r = compose(w);
      if (r.leading_flag || r.trailing_flag) continue;
      CHECK(substitute(r.composed) == w);
    }
  }
}

TEST_CASE("deflation depth") {
  CHECK(deflation_illegality_depth(W("BB"), 10) == 0u);
  CHECK(deflation_illegality_depth(W("AAA"), 10) == 1u);
  CHECK(deflation_illegality_depth(W("ABABAB"), 10) == 2u);
  CHECK(deflation_illegality_depth(W("ABABAB"), 1) == std::nullopt);
  CHECK(deflation_illegality_depth(W("BABAABABAABAB"), 10) == 4u);
  for (std::size_t n = 1; n <= 15; ++n) {
    for (const Word& w : factor_set(n)) CHECK(deflation_illegality_depth(w, 64) == std::nullopt);
  }
}

TEST_CASE("is_factor") {
  CHECK(is_factor(W("ABAAB")));
  CHECK_FALSE(is_factor(W("AAA")));
  CHECK_FALSE(is_factor(W("BABAB")));
  CHECK_FALSE(is_factor(W("BB")));
  CHECK(is_factor(W("")));
  CHECK(is_factor_substring(W("BAABA")));
}

TEST_CASE("factor_set") {
  CHECK(factor_set(1) == std::set<Word>{W("A"), W("B")});
  CHECK(factor_set(2) == std::set<Word>{W("AA"), W("AB"), W("BA")});
  CHECK(factor_set(3).size() == 4);
  for (std::size_t n = 1; n <= 25; ++n) CHECK(factor_set(n).size() == n + 1);
}

TEST_CASE("factor membership is exhaustive up to length 15") {
  const std::string text = fib_concat(2000);
  for (std::size_t n = 1; n <= 15; ++n) {
    const std::set<Word> fs = factor_set(n);
    std::size_t found = 0;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      const Word w = word_from_bits(bits, n);
      const bool in_text = text.find(to_string(w)) != std::string::npos;
      const bool member = fs.count(w) > 0;
      CHECK(in_text == member);
      CHECK(is_factor(w) == member);
      found += member;
    }
    CHECK(found == n + 1);
  }
}

TEST_CASE("FactorIndex matches factor_set") {
  const FactorIndex idx(20);
  CHECK(idx.max_len() == 20);
  for (std::size_t n = 0; n <= 20; ++n) CHECK(idx.count(n) == n + 1);
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const Word& w : factor_set(n)) CHECK(idx.contains(w));
  }
  CHECK_FALSE(idx.contains(W("AAA")));
  CHECK(FactorIndex::encode(W("BAB")) == 5u);
  CHECK_THROWS_AS(idx.contains(fibonacci_word(21)), std::out_of_range);
}

TEST_CASE("rotation coding") {
  SUBCASE("Fibonacci parameters reproduce the growth") {
    const RotationCoding rc = rotation_coding(-golden::inv_tau(), GoldenNumber(1), golden::tau(),
                                              GoldenNumber(1), 13);
    CHECK(to_string(rc.word) == "ABAABABAABAAB");
    CHECK_FALSE(rc.periodic);
    CHECK_FALSE(rc.approximate);
  }
  SUBCASE("rational ratio is periodic") {
    const RotationCoding rc =
        rotation_coding(GoldenNumber(-1), GoldenNumber(2), GoldenNumber(3), GoldenNumber(0), 9);
    CHECK(rc.periodic);
    CHECK(to_string(rc.word) == "BAABAABAA");
  }
  SUBCASE("bad parameters") {
    CHECK_THROWS_AS(rotation_coding(GoldenNumber(1), GoldenNumber(1), GoldenNumber(0),
                                    GoldenNumber(0), 3),
                    DegenerateParameters);
    CHECK_THROWS_AS(rotation_coding(-golden::inv_tau(), GoldenNumber(1), GoldenNumber(2),
                                    GoldenNumber(0), 3),
                    DegenerateParameters);
    CHECK_THROWS_AS(rotation_coding(-golden::inv_tau(), GoldenNumber(1), golden::tau(),
                                    golden::tau(), 3),
                    DegenerateParameters);
    CHECK_THROWS_AS(rotation_coding(-0.5, 1.0, 2.0, 0.0, 3), DegenerateParameters);
  }
  SUBCASE("irrational float parameters are deterministic") {
    const double a = -1.0 / std::sqrt(2.0);
    const RotationCoding x = rotation_coding(a, 1.0, 1.0 - a, 0.3, 20);
    const RotationCoding y = rotation_coding(a, 1.0, 1.0 - a, 0.3, 20);
    CHECK(x.word == y.word);
    CHECK(x.approximate);
    CHECK(x.word.size() == 20);
  }
  SUBCASE("silver mean against the closed-form rotation") {
    // Steps -1/(1+sqrt2) and +1 on a circle of width 1 + 1/(1+sqrt2). The
    // boundary after n letters is y0 + n (mod width).
    const double silver = 1.0 + std::sqrt(2.0);
    const double a = -1.0 / silver;
    const double width = 1.0 - a;
    const double y0 = 0.25;
    const std::size_t n = 400;
    const RotationCoding rc = rotation_coding(a, 1.0, width, y0, n);
    double y = y0;
    for (std::size_t i = 0; i < n; ++i) {
      const double closed = std::fmod(y0 + double(i), width);
      CHECK(std::abs(y - closed) < 1e-12);
      const Letter expect = closed >= -a ? Letter::A : Letter::B;
      CHECK(rc.word[i] == expect);
      y += rc.word[i] == Letter::A ? a : 1.0;
    }
  }
}
