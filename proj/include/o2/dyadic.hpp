#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "o2/scalar.hpp"

namespace o2 {

enum class Orientation : int { plus = 1, minus = -1 };

constexpr Orientation operator*(Orientation x, Orientation y) {
  return x == y ? Orientation::plus : Orientation::minus;
}

constexpr char orientation_char(Orientation e) { return e == Orientation::plus ? '+' : '-'; }

/// Standard dyadic subinterval D(d,j) = [-1 + j*2^(1-d), -1 + (j+1)*2^(1-d)]
/// of [-1,1], with 0 <= j < 2^d.
///
/// Two standard intervals are either nested or meet in at most one point.
/// Ordering is by (depth, index).
struct DyadicInterval {
  static constexpr unsigned kMaxDepth = 60;

  unsigned depth = 0;
  std::uint64_t index = 0;

  DyadicInterval() = default;
  /// Throws std::invalid_argument unless depth <= kMaxDepth and index < 2^depth.
  DyadicInterval(unsigned depth, std::uint64_t index);

  static DyadicInterval whole() { return {}; }

  DyadicInterval left_child() const { return {depth + 1, index * 2}; }
  DyadicInterval right_child() const { return {depth + 1, index * 2 + 1}; }
  /// Precondition: depth > 0.
  DyadicInterval parent() const { return {depth - 1, index / 2}; }
  bool is_left_child() const { return depth > 0 && index % 2 == 0; }

  /// True when `inner` is nested in (or equal to) this interval.
  bool contains(const DyadicInterval& inner) const {
    return inner.depth >= depth && (inner.index >> (inner.depth - depth)) == index;
  }

  Rational left() const;
  Rational right() const;
  Rational length() const;

  std::string to_string() const;  // D(d,j)
  static DyadicInterval parse(std::string_view text);

  friend auto operator<=>(const DyadicInterval&, const DyadicInterval&) = default;
};

/// t -> sign * 2^exponent * t + offset.
struct SignedAffineMap {
  Orientation sign = Orientation::plus;
  int exponent = 0;
  Rational offset = 0;

  Rational slope() const;
  Rational operator()(const Rational& t) const;
  SignedAffineMap inverse() const;
  std::string to_string() const;

  friend bool operator==(const SignedAffineMap& x, const SignedAffineMap& y) {
    return x.sign == y.sign && x.exponent == y.exponent && x.offset == y.offset;
  }
};

/// (outer o inner)(t) = outer(inner(t)).
SignedAffineMap compose(const SignedAffineMap& outer, const SignedAffineMap& inner);

/// The affine bijection of the given orientation with phi(from) = to.
SignedAffineMap unique_map(const DyadicInterval& from, const DyadicInterval& to, Orientation sign);

/// Deeper of the two when nested; nullopt when interiors are disjoint.
std::optional<DyadicInterval> intersect(const DyadicInterval& x, const DyadicInterval& y);

/// Standard interval with the given endpoints, if any.
std::optional<DyadicInterval> interval_from_endpoints(const Rational& lo, const Rational& hi);

/// Exact set image. Throws DyadicError if the result is not a standard interval.
DyadicInterval image(const SignedAffineMap& phi, const DyadicInterval& x);
DyadicInterval preimage(const SignedAffineMap& phi, const DyadicInterval& y);

DyadicInterval reflect(const DyadicInterval& x);

/// Image of `sub` (nested in `from`) under unique_map(from, to, sign),
/// computed with integer cell arithmetic. Throws DyadicError if `sub` is not
/// inside `from` or the result exceeds kMaxDepth.
DyadicInterval transport(const DyadicInterval& sub, const DyadicInterval& from,
                         const DyadicInterval& to, Orientation sign);

}  // namespace o2
