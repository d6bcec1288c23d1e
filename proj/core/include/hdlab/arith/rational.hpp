#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "hdlab/arith/bigint.hpp"

namespace hdlab::arith {

/// Exact rational number kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num) : q_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "a", "a/b" or "-a/b".
  static Rational parse(std::string_view text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }

  Rational operator-() const { return from_mpq(-q_); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  /// "a/b", or "a" for integers.
  std::string to_string() const;
  /// Decimal rendering rounded half away from zero to the given number of digits.
  std::string to_decimal(int digits = 20) const;
  /// Nearest double; only for report rendering.
  double to_double() const { return q_.get_d(); }

 private:
  static Rational from_mpq(const mpq_class& q) {
    Rational r;
    r.q_ = q;
    return r;
  }
  mpq_class q_;
};

BigInt floor(const Rational& x);
BigInt ceil(const Rational& x);

/// x / y with the conventions 0/0 = 1 and y/0 = +infinity for y > 0.
struct ExtRational {
  bool infinite = false;
  Rational value;
};
ExtRational ratio_with_conventions(const BigInt& num, const BigInt& den);

}  // namespace hdlab::arith
