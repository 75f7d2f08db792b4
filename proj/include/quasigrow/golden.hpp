#pragma once

// Exact arithmetic in Q(tau), tau = (1 + sqrt 5) / 2.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quasigrow {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Sign { negative = -1, zero = 0, positive = 1 };

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element p + q*tau with rational p, q.
///
/// Stored as integer numerators over one positive common denominator,
/// (num_p + num_q*tau) / den, reduced so that gcd(num_p, num_q, den) = 1.
/// Two values are equal iff their stored triples are equal.
class GoldenNumber {
 public:
  GoldenNumber() = default;
  GoldenNumber(long long p) : p_(p) {}  // NOLINT: integers embed implicitly
  GoldenNumber(const Rational& p, const Rational& q);

  static GoldenNumber from_parts(Integer num_p, Integer num_q, Integer den = 1);
  static GoldenNumber tau() { return from_parts(0, 1); }

  Rational p() const;
  Rational q() const;
  const Integer& num_p() const { return p_; }
  const Integer& num_q() const { return q_; }
  const Integer& den() const { return den_; }

  Sign sign() const;
  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
  bool is_rational() const { return q_.is_zero(); }

  /// Galois conjugate p + q*(1 - tau).
  GoldenNumber conjugate() const;
  /// Field norm x * conjugate(x), a rational.
  Rational norm() const;

  double to_double() const;
  long double to_long_double() const;

  /// "p + qt" with p, q printed as n or n/d, e.g. "2 - 1t", "-1/2 + 0t".
  std::string to_string() const;
  /// Accepts sums of terms like "3", "-1/2", "t", "2t", "1/3t", "1/3*t".
  static GoldenNumber parse(std::string_view text);

  GoldenNumber operator-() const;
  GoldenNumber& operator+=(const GoldenNumber& rhs);
  GoldenNumber& operator-=(const GoldenNumber& rhs);
  GoldenNumber& operator*=(const GoldenNumber& rhs);
  GoldenNumber& operator/=(const GoldenNumber& rhs);

  friend GoldenNumber operator+(GoldenNumber a, const GoldenNumber& b) { return a += b; }
  friend GoldenNumber operator-(GoldenNumber a, const GoldenNumber& b) { return a -= b; }
  friend GoldenNumber operator*(GoldenNumber a, const GoldenNumber& b) { return a *= b; }
  friend GoldenNumber operator/(GoldenNumber a, const GoldenNumber& b) { return a /= b; }

  friend bool operator==(const GoldenNumber& a, const GoldenNumber& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const GoldenNumber& a, const GoldenNumber& b);

  friend std::ostream& operator<<(std::ostream& os, const GoldenNumber& x) {
    return os << x.to_string();
  }

 private:
  void normalize();

  Integer p_ = 0;
  Integer q_ = 0;
  Integer den_ = 1;
};

inline GoldenNumber add(const GoldenNumber& a, const GoldenNumber& b) { return a + b; }
inline GoldenNumber mul(const GoldenNumber& a, const GoldenNumber& b) { return a * b; }
inline Sign sign(const GoldenNumber& a) { return a.sign(); }

/// The representative r of a modulo tau with 0 <= r < tau.
GoldenNumber mod_tau(const GoldenNumber& a);

namespace golden {

inline const GoldenNumber& tau() {
  static const GoldenNumber v = GoldenNumber::tau();
  return v;
}
/// 1/tau = tau - 1
inline const GoldenNumber& inv_tau() {
  static const GoldenNumber v = GoldenNumber::from_parts(-1, 1);
  return v;
}
/// 1/tau^2 = 2 - tau
inline const GoldenNumber& inv_tau2() {
  static const GoldenNumber v = GoldenNumber::from_parts(2, -1);
  return v;
}
/// 2/tau^2 = 4 - 2 tau
inline const GoldenNumber& two_inv_tau2() {
  static const GoldenNumber v = GoldenNumber::from_parts(4, -2);
  return v;
}

constexpr long double tau_ld = 1.618033988749894848204586834365638118L;

}  // namespace golden

/// Interval with GoldenNumber endpoints and per-end closedness.
class GoldenInterval {
 public:
  /// The empty interval.
  GoldenInterval() = default;
  GoldenInterval(GoldenNumber lo, GoldenNumber hi, bool closed_lo = true, bool closed_hi = false);

  static GoldenInterval empty() { return {}; }
  static GoldenInterval half_open(GoldenNumber lo, GoldenNumber hi) {
    return {std::move(lo), std::move(hi), true, false};
  }

  bool is_empty() const { return empty_; }
  const GoldenNumber& lo() const { return lo_; }
  const GoldenNumber& hi() const { return hi_; }
  bool closed_lo() const { return closed_lo_; }
  bool closed_hi() const { return closed_hi_; }

  bool contains(const GoldenNumber& x) const;
  GoldenNumber width() const;
  GoldenInterval shifted(const GoldenNumber& by) const;

  /// "[lo, hi)" style; "empty" for the empty interval.
  std::string to_string() const;

  friend bool operator==(const GoldenInterval& a, const GoldenInterval& b);

 private:
  GoldenNumber lo_;
  GoldenNumber hi_;
  bool closed_lo_ = true;
  bool closed_hi_ = false;
  bool empty_ = true;
};

GoldenInterval interval_intersect(const GoldenInterval& a, const GoldenInterval& b);

}  // namespace quasigrow
