#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace o2 {

using Rational = mpq_class;

/// Exact element of Q(i, sqrt2), stored as a + b*sqrt2 + i*(c + d*sqrt2).
///
/// Every component is a GMP rational, so the representation is canonical:
/// two scalars are equal iff their four components are equal.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long n) : a_(n) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational a, Rational b = 0, Rational c = 0, Rational d = 0);

  static Scalar sqrt2() { return Scalar(0, 1); }
  static Scalar imag() { return Scalar(0, 0, 1); }
  /// sqrt2^k for any integer k.
  static Scalar sqrt2_pow(int k);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }
  bool is_real() const { return sgn(c_) == 0 && sgn(d_) == 0; }

  Scalar& operator+=(const Scalar& y);
  Scalar& operator-=(const Scalar& y);
  Scalar& operator*=(const Scalar& y);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  Scalar operator-() const;

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

  /// Canonical text, e.g. `1/2*r2`, `-i`, `1/2*r2+1/2*i*r2`. Contains no
  /// whitespace and round-trips through parse().
  std::string to_string() const;
  static Scalar parse(std::string_view text);

 private:
  Rational a_, b_, c_, d_;
};

Scalar add(const Scalar& x, const Scalar& y);
Scalar mul(const Scalar& x, const Scalar& y);
Scalar neg(const Scalar& x);
Scalar conj(const Scalar& x);
/// Throws DivisionByZero on zero.
Scalar inv(const Scalar& x);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace o2
