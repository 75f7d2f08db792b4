#include "quasigrow/golden.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace quasigrow {

namespace {

std::string rational_text(const Integer& num, const Integer& den) {
  Integer g = gcd(num, den);
  if (g.is_zero()) return "0";
  Integer n = num / g;
  Integer d = den / g;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

// x < tau for rational x = num/den, den > 0, num >= 0, via x^2 < x + 1.
bool rational_below_tau(const Integer& num, const Integer& den) {
  return num * num < num * den + den * den;
}

// Sign of p + q*tau for integers p, q.
Sign sign_of(const Integer& p, const Integer& q) {
  const int sp = p.sign();
  const int sq = q.sign();
  if (sp >= 0 && sq >= 0) return (sp == 0 && sq == 0) ? Sign::zero : Sign::positive;
  if (sp <= 0 && sq <= 0) return Sign::negative;
  if (sq > 0) {
    // q*tau - |p| > 0  <=>  |p|/q < tau
    return rational_below_tau(-p, q) ? Sign::positive : Sign::negative;
  }
  // p - |q|*tau > 0  <=>  p/|q| > tau (never equal, tau is irrational)
  return rational_below_tau(p, -q) ? Sign::negative : Sign::positive;
}

}  // namespace

GoldenNumber::GoldenNumber(const Rational& p, const Rational& q) {
  const Integer& dp = denominator(p);
  const Integer& dq = denominator(q);
  Integer l = lcm(dp, dq);
  p_ = numerator(p) * (l / dp);
  q_ = numerator(q) * (l / dq);
  den_ = l;
  normalize();
}

GoldenNumber GoldenNumber::from_parts(Integer num_p, Integer num_q, Integer den) {
  if (den.is_zero()) throw std::domain_error("GoldenNumber: zero denominator");
  GoldenNumber x;
  x.p_ = std::move(num_p);
  x.q_ = std::move(num_q);
  x.den_ = std::move(den);
  x.normalize();
  return x;
}

void GoldenNumber::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    p_ = -p_;
    q_ = -q_;
  }
  if (den_ == 1) return;
  if (p_.is_zero() && q_.is_zero()) {
    den_ = 1;
    return;
  }
  Integer g = gcd(gcd(p_, q_), den_);
  if (g != 1) {
    p_ /= g;
    q_ /= g;
    den_ /= g;
  }
}

Rational GoldenNumber::p() const { return Rational(p_, den_); }
Rational GoldenNumber::q() const { return Rational(q_, den_); }

Sign GoldenNumber::sign() const {
  // den_ > 0, so the sign is that of p_ + q_*tau.
  return sign_of(p_, q_);
}

GoldenNumber GoldenNumber::conjugate() const { return from_parts(p_ + q_, -q_, den_); }

Rational GoldenNumber::norm() const {
  return Rational(p_ * p_ + p_ * q_ - q_ * q_, den_ * den_);
}

long double GoldenNumber::to_long_double() const {
  const long double p = p_.convert_to<long double>();
  const long double q = q_.convert_to<long double>();
  const long double d = den_.convert_to<long double>();
  return (p + q * golden::tau_ld) / d;
}

double GoldenNumber::to_double() const { return static_cast<double>(to_long_double()); }

std::string GoldenNumber::to_string() const {
  std::string out = rational_text(p_, den_);
  if (q_ < 0) {
    out += " - " + rational_text(-q_, den_);
  } else {
    out += " + " + rational_text(q_, den_);
  }
  return out + "t";
}

GoldenNumber GoldenNumber::parse(std::string_view text) {
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  const auto read_int = [&]() -> Integer {
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return Integer(std::string(text.substr(start, i - start)));
  };
  const auto at_digit = [&] {
    return i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]));
  };

  Rational p = 0;
  Rational q = 0;
  bool any_term = false;
  skip_ws();
  while (i < text.size()) {
    int sgn = 1;
    if (text[i] == '+' || text[i] == '-') {
      sgn = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (any_term) {
      throw ParseError("golden number: expected '+' or '-' in \"" + std::string(text) + "\"");
    }
    Rational coeff = 1;
    bool has_number = false;
    if (at_digit()) {
      Integer num = read_int();
      Integer den = 1;
      skip_ws();
      if (i < text.size() && text[i] == '/') {
        ++i;
        skip_ws();
        if (!at_digit()) throw ParseError("golden number: missing denominator");
        den = read_int();
        if (den.is_zero()) throw ParseError("golden number: zero denominator");
      }
      coeff = Rational(num, den);
      has_number = true;
      skip_ws();
    }
    bool is_tau = false;
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip_ws();
      if (i >= text.size() || text[i] != 't') throw ParseError("golden number: expected 't' after '*'");
    }
    if (i < text.size() && text[i] == 't') {
      is_tau = true;
      ++i;
    }
    if (!has_number && !is_tau) {
      throw ParseError("golden number: malformed term in \"" + std::string(text) + "\"");
    }
    (is_tau ? q : p) += sgn * coeff;
    any_term = true;
    skip_ws();
  }
  if (!any_term) throw ParseError("golden number: empty input");
  return GoldenNumber(p, q);
}

GoldenNumber GoldenNumber::operator-() const { return from_parts(-p_, -q_, den_); }

GoldenNumber& GoldenNumber::operator+=(const GoldenNumber& rhs) {
  if (den_ == rhs.den_) {
    p_ += rhs.p_;
    q_ += rhs.q_;
  } else {
    p_ = p_ * rhs.den_ + rhs.p_ * den_;
    q_ = q_ * rhs.den_ + rhs.q_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

GoldenNumber& GoldenNumber::operator-=(const GoldenNumber& rhs) {
  if (den_ == rhs.den_) {
    p_ -= rhs.p_;
    q_ -= rhs.q_;
  } else {
    p_ = p_ * rhs.den_ - rhs.p_ * den_;
    q_ = q_ * rhs.den_ - rhs.q_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

GoldenNumber& GoldenNumber::operator*=(const GoldenNumber& rhs) {
  // (p1 + q1 t)(p2 + q2 t) = (p1 p2 + q1 q2) + (p1 q2 + q1 p2 + q1 q2) t, using t^2 = t + 1
  Integer qq = q_ * rhs.q_;
  Integer np = p_ * rhs.p_ + qq;
  Integer nq = p_ * rhs.q_ + q_ * rhs.p_ + qq;
  p_ = std::move(np);
  q_ = std::move(nq);
  den_ *= rhs.den_;
  normalize();
  return *this;
}

GoldenNumber& GoldenNumber::operator/=(const GoldenNumber& rhs) {
  if (rhs.is_zero()) throw std::domain_error("GoldenNumber: division by zero");
  // a / b = a * conj(b) / N(b); with b = (P + Q t)/D, conj(b) = ((P + Q) - Q t)/D and
  // N(b) = (P^2 + PQ - Q^2)/D^2, so a / b = a * ((P + Q) - Q t) * D / (P^2 + PQ - Q^2).
  const Integer norm_num = rhs.p_ * rhs.p_ + rhs.p_ * rhs.q_ - rhs.q_ * rhs.q_;
  GoldenNumber factor = from_parts((rhs.p_ + rhs.q_) * rhs.den_, -rhs.q_ * rhs.den_, norm_num);
  return *this *= factor;
}

std::strong_ordering operator<=>(const GoldenNumber& a, const GoldenNumber& b) {
  // Sign of a - b over the common denominator a.den * b.den > 0, unreduced.
  const Sign s = a.den_ == b.den_ ? sign_of(a.p_ - b.p_, a.q_ - b.q_)
                                  : sign_of(a.p_ * b.den_ - b.p_ * a.den_,
                                            a.q_ * b.den_ - b.q_ * a.den_);
  switch (s) {
    case Sign::negative:
      return std::strong_ordering::less;
    case Sign::positive:
      return std::strong_ordering::greater;
    case Sign::zero:
      break;
  }
  return std::strong_ordering::equal;
}

GoldenNumber mod_tau(const GoldenNumber& a) {
  const GoldenNumber& t = golden::tau();
  GoldenNumber r = a;
  const long double estimate = std::floor(a.to_long_double() / golden::tau_ld);
  if (std::isfinite(estimate) && estimate != 0.0L) {
    r -= GoldenNumber::from_parts(0, Integer(static_cast<long long>(estimate)));
  }
  while (r.sign() == Sign::negative) r += t;
  while (r >= t) r -= t;
  return r;
}

GoldenInterval::GoldenInterval(GoldenNumber lo, GoldenNumber hi, bool closed_lo, bool closed_hi)
    : lo_(std::move(lo)), hi_(std::move(hi)), closed_lo_(closed_lo), closed_hi_(closed_hi) {
  const auto c = lo_ <=> hi_;
  empty_ = c == std::strong_ordering::greater ||
           (c == std::strong_ordering::equal && !(closed_lo_ && closed_hi_));
  if (empty_) *this = GoldenInterval();
}

bool GoldenInterval::contains(const GoldenNumber& x) const {
  if (empty_) return false;
  const auto lo_cmp = x <=> lo_;
  if (lo_cmp == std::strong_ordering::less || (lo_cmp == std::strong_ordering::equal && !closed_lo_)) {
    return false;
  }
  const auto hi_cmp = x <=> hi_;
  return hi_cmp == std::strong_ordering::less || (hi_cmp == std::strong_ordering::equal && closed_hi_);
}

GoldenNumber GoldenInterval::width() const { return empty_ ? GoldenNumber() : hi_ - lo_; }

GoldenInterval GoldenInterval::shifted(const GoldenNumber& by) const {
  if (empty_) return {};
  return {lo_ + by, hi_ + by, closed_lo_, closed_hi_};
}

std::string GoldenInterval::to_string() const {
  if (empty_) return "empty";
  return std::string(closed_lo_ ? "[" : "(") + lo_.to_string() + ", " + hi_.to_string() +
         (closed_hi_ ? "]" : ")");
}

bool operator==(const GoldenInterval& a, const GoldenInterval& b) {
  if (a.empty_ || b.empty_) return a.empty_ == b.empty_;
  return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.closed_lo_ == b.closed_lo_ &&
         a.closed_hi_ == b.closed_hi_;
}

GoldenInterval interval_intersect(const GoldenInterval& a, const GoldenInterval& b) {
  if (a.is_empty() || b.is_empty()) return {};

  GoldenNumber lo = a.lo();
  bool closed_lo = a.closed_lo();
  const auto lc = b.lo() <=> a.lo();
  if (lc == std::strong_ordering::greater) {
    lo = b.lo();
    closed_lo = b.closed_lo();
  } else if (lc == std::strong_ordering::equal) {
    closed_lo = a.closed_lo() && b.closed_lo();
  }

  GoldenNumber hi = a.hi();
  bool closed_hi = a.closed_hi();
  const auto hc = b.hi() <=> a.hi();
  if (hc == std::strong_ordering::less) {
    hi = b.hi();
    closed_hi = b.closed_hi();
  } else if (hc == std::strong_ordering::equal) {
    closed_hi = a.closed_hi() && b.closed_hi();
  }
  return {std::move(lo), std::move(hi), closed_lo, closed_hi};
}

}  // namespace quasigrow
