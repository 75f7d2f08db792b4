#include <doctest.h>

#include "quasigrow/golden.hpp"

#include <cmath>
#include <random>

using namespace quasigrow;

namespace {

GoldenNumber gn(long long p, long long q, long long den = 1) {
  return GoldenNumber::from_parts(p, q, den);
}

double tau_d() { return (1.0 + std::sqrt(5.0)) / 2.0; }

// Random p + q tau with |p|, |q| <= bound and denominators up to max_den.
GoldenNumber random_golden(std::mt19937_64& rng, long long bound, long long max_den) {
  std::uniform_int_distribution<long long> coeff(-bound, bound);
  std::uniform_int_distribution<long long> den(1, max_den);
  return GoldenNumber(Rational(coeff(rng), den(rng)), Rational(coeff(rng), den(rng)));
}

}  // namespace

TEST_CASE("add") {
  CHECK(add(gn(1, 0), gn(0, 1)) == gn(1, 1));
  CHECK(add(gn(1, 0), gn(0, 1)) == golden::tau() * golden::tau());
  CHECK(add(gn(0, 0), gn(7, -3)) == gn(7, -3));
  // 1/tau^2 + 1/tau = 1; floats: 0.38197 + 0.61803
  CHECK(add(gn(2, -1), gn(-1, 1)) == gn(1, 0));
  CHECK(std::abs(gn(2, -1).to_double() + gn(-1, 1).to_double() - 1.0) < 1e-15);
}

TEST_CASE("mul") {
  CHECK(mul(golden::tau(), golden::tau()) == gn(1, 1));
  CHECK(mul(gn(-1, 1), golden::tau()) == gn(1, 0));
  // (2 - t)(1 + t) = 2 + 2t - t - t^2 = 2 + t - (t + 1) = 1
  CHECK(mul(gn(2, -1), gn(1, 1)) == gn(1, 0));
  const GoldenNumber& t = golden::tau();
  CHECK(mul(t, t) - t - 1 == GoldenNumber());
}

TEST_CASE("division and norm") {
  CHECK(GoldenNumber(1) / golden::tau() == golden::inv_tau());
  CHECK(GoldenNumber(1) / (golden::tau() * golden::tau()) == golden::inv_tau2());
  CHECK(gn(3, 5).norm() == Rational(9 + 15 - 25));
  CHECK_THROWS_AS(GoldenNumber(1) / GoldenNumber(), std::domain_error);
}

TEST_CASE("sign") {
  CHECK(sign(gn(2, -1)) == Sign::positive);
  CHECK(sign(gn(1, -1)) == Sign::negative);
  // 3/tau - tau = 2 tau - 3 > 0 since 2 tau ~ 3.236
  CHECK(sign(gn(-3, 3) - golden::tau()) == Sign::positive);
  CHECK(sign(gn(-3, 2)) == Sign::positive);
  CHECK(sign(GoldenNumber()) == Sign::zero);
  CHECK(sign(gn(-5, 3)) == Sign::negative);  // 3 tau ~ 4.854 < 5
  CHECK(sign(gn(5, -3)) == Sign::positive);
  CHECK(sign(gn(-1, 1, 3)) == Sign::positive);
}

TEST_CASE("sign agrees with double evaluation on random inputs") {
  std::mt19937_64 rng(20240611);
  int compared = 0;
  for (int i = 0; i < 10000; ++i) {
    const GoldenNumber x = random_golden(rng, 1000000, 1000);
    const double f = x.p().convert_to<double>() + x.q().convert_to<double>() * tau_d();
    if (std::abs(f) <= 1e-6) continue;
    ++compared;
    CHECK(static_cast<int>(x.sign()) == (f > 0 ? 1 : -1));
  }
  CHECK(compared > 9900);
}

TEST_CASE("sign at near-ties from Fibonacci convergents") {
  // F_{k+1} - F_k tau alternates in sign and shrinks like tau^-k.
  Integer a = 1, b = 1;  // F_1, F_2
  for (int k = 1; k < 80; ++k) {
    const GoldenNumber x = GoldenNumber::from_parts(b, -a);
    CHECK(static_cast<int>(x.sign()) == (k % 2 == 1 ? -1 : 1));
    Integer c = a + b;
    a = b;
    b = c;
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const GoldenNumber a = random_golden(rng, 1000, 50);
    const GoldenNumber b = random_golden(rng, 1000, 50);
    const GoldenNumber c = random_golden(rng, 1000, 50);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("canonical representation") {
  CHECK(GoldenNumber(Rational(2, 4), Rational(0)) == gn(1, 0, 2));
  CHECK(gn(2, 4, 4) == gn(1, 2, 2));
  CHECK(gn(3, 0, -6) == gn(-1, 0, 2));
  CHECK(gn(1, 0, 2).den() == 2);
  CHECK(gn(4, 2, 2).den() == 1);
  CHECK(gn(1, 2, 3).p() == Rational(1, 3));
  CHECK(gn(1, 2, 3).q() == Rational(2, 3));
}

TEST_CASE("mod_tau") {
  CHECK(mod_tau(golden::tau()) == GoldenNumber());
  CHECK(mod_tau(1) == GoldenNumber(1));
  CHECK(mod_tau(gn(2, 1)) == gn(2, -1));  // 2 + t - 2t, ~0.382
  CHECK(std::abs(mod_tau(gn(2, 1)).to_double() - (2 + tau_d() - 2 * tau_d())) < 1e-15);
  CHECK(mod_tau(-golden::inv_tau()) == GoldenNumber(1));
  CHECK(mod_tau(gn(-1000, 3, 7)) >= GoldenNumber());

  std::mt19937_64 rng(99);
  for (int i = 0; i < 1000; ++i) {
    const GoldenNumber x = random_golden(rng, 100000, 30);
    const GoldenNumber r = mod_tau(x);
    CHECK(r.sign() != Sign::negative);
    CHECK(r < golden::tau());
    CHECK(((x - r) / golden::tau()).is_rational());
    CHECK(mod_tau(r) == r);
  }
}

TEST_CASE("text form") {
  CHECK(gn(1, 0).to_string() == "1 + 0t");
  CHECK(gn(2, -1).to_string() == "2 - 1t");
  CHECK(gn(-1, 1).to_string() == "-1 + 1t");
  CHECK(gn(1, 3, 2).to_string() == "1/2 + 3/2t");

  CHECK(GoldenNumber::parse("1") == gn(1, 0));
  CHECK(GoldenNumber::parse("2 - 1t") == gn(2, -1));
  CHECK(GoldenNumber::parse("-1+1t") == gn(-1, 1));
  CHECK(GoldenNumber::parse("t") == golden::tau());
  CHECK(GoldenNumber::parse("-t") == -golden::tau());
  CHECK(GoldenNumber::parse("1/2") == gn(1, 0, 2));
  CHECK(GoldenNumber::parse("3/4t - 1/3") == GoldenNumber(Rational(-1, 3), Rational(3, 4)));
  CHECK(GoldenNumber::parse("2*t") == gn(0, 2));
  CHECK(GoldenNumber::parse("1 + 1 + t") == gn(2, 1));

  CHECK_THROWS_AS(GoldenNumber::parse(""), ParseError);
  CHECK_THROWS_AS(GoldenNumber::parse("x"), ParseError);
  CHECK_THROWS_AS(GoldenNumber::parse("1/0"), ParseError);
  CHECK_THROWS_AS(GoldenNumber::parse("1 2"), ParseError);
  CHECK_THROWS_AS(GoldenNumber::parse("1.5"), ParseError);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const GoldenNumber x = random_golden(rng, 1000000, 1000);
    CHECK(GoldenNumber::parse(x.to_string()) == x);
  }
}

TEST_CASE("intervals") {
  const GoldenInterval full = GoldenInterval::half_open(0, golden::tau());
  const GoldenInterval a_dom = GoldenInterval::half_open(golden::inv_tau(), golden::tau());
  const GoldenInterval b_dom = GoldenInterval::half_open(0, golden::inv_tau());

  CHECK(interval_intersect(full, a_dom) == a_dom);
  CHECK(interval_intersect(b_dom, a_dom).is_empty());
  // [2/tau, tau) and [0, 1/tau): 1.236 > 0.618
  CHECK(interval_intersect(GoldenInterval::half_open(gn(-2, 2), golden::tau()), b_dom).is_empty());

  const GoldenInterval closed(0, golden::inv_tau(), true, true);
  const GoldenInterval touch = interval_intersect(closed, a_dom);
  CHECK_FALSE(touch.is_empty());
  CHECK(touch.lo() == golden::inv_tau());
  CHECK(touch.hi() == golden::inv_tau());
  CHECK(touch.contains(golden::inv_tau()));

  CHECK(a_dom.contains(golden::inv_tau()));
  CHECK_FALSE(b_dom.contains(golden::inv_tau()));
  CHECK_FALSE(a_dom.contains(golden::tau()));
  CHECK(GoldenInterval(1, 1).is_empty());
  CHECK(GoldenInterval(2, 1).is_empty());
  CHECK(a_dom.width() == GoldenNumber(1));  // tau - 1/tau
  CHECK(a_dom.shifted(-golden::inv_tau()) == GoldenInterval::half_open(0, 1));
}
