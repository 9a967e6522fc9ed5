#include "o2/dyadic.hpp"

#include <cstdio>
#include <stdexcept>

#include "o2/errors.hpp"

namespace o2 {

namespace {

Rational pow2(int e) {
  mpz_class p = 1;
  if (e >= 0) {
    p <<= e;
    return Rational(p);
  }
  p <<= -e;
  Rational r(mpz_class(1), p);
  r.canonicalize();
  return r;
}

// Exponent k with x == 2^k, if x is a power of two.
std::optional<int> log2_exact(const Rational& x) {
  if (sgn(x) <= 0) return std::nullopt;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  if (num == 1) {
    if (mpz_popcount(den.get_mpz_t()) != 1) return std::nullopt;
    return -static_cast<int>(mpz_sizeinbase(den.get_mpz_t(), 2) - 1);
  }
  if (den == 1 && mpz_popcount(num.get_mpz_t()) == 1) {
    return static_cast<int>(mpz_sizeinbase(num.get_mpz_t(), 2) - 1);
  }
  return std::nullopt;
}

}  // namespace

DyadicInterval::DyadicInterval(unsigned d, std::uint64_t j) : depth(d), index(j) {
  if (d > kMaxDepth) throw std::invalid_argument("dyadic depth exceeds maximum");
  if (j >> d != 0) throw std::invalid_argument("dyadic index out of range");
}

Rational DyadicInterval::length() const { return pow2(1 - static_cast<int>(depth)); }

Rational DyadicInterval::left() const {
  return Rational(-1) + Rational(mpz_class(std::to_string(index))) * length();
}

Rational DyadicInterval::right() const { return left() + length(); }

std::string DyadicInterval::to_string() const {
  return "D(" + std::to_string(depth) + "," + std::to_string(index) + ")";
}

DyadicInterval DyadicInterval::parse(std::string_view text) {
  unsigned d = 0;
  unsigned long long j = 0;
  int consumed = 0;
  const std::string s(text);
  if (std::sscanf(s.c_str(), "D(%u,%llu)%n", &d, &j, &consumed) != 2 ||
      static_cast<std::size_t>(consumed) != s.size()) {
    throw ParseError("malformed dyadic interval '" + s + "'", 0);
  }
  return DyadicInterval(d, j);
}

Rational SignedAffineMap::slope() const {
  return sign == Orientation::plus ? pow2(exponent) : Rational(-pow2(exponent));
}

Rational SignedAffineMap::operator()(const Rational& t) const { return slope() * t + offset; }

SignedAffineMap SignedAffineMap::inverse() const {
  // y = s t + b  =>  t = y/s - b/s
  const Rational inv_slope = 1 / slope();
  return {sign, -exponent, Rational(-offset * inv_slope)};
}

std::string SignedAffineMap::to_string() const {
  const Rational k = slope();
  std::string out = k == 1 ? "t" : k == -1 ? "-t" : k.get_str() + "*t";
  if (sgn(offset) > 0) out += "+" + offset.get_str();
  if (sgn(offset) < 0) out += offset.get_str();
  return out;
}

SignedAffineMap compose(const SignedAffineMap& outer, const SignedAffineMap& inner) {
  return {outer.sign * inner.sign, outer.exponent + inner.exponent,
          Rational(outer.slope() * inner.offset + outer.offset)};
}

SignedAffineMap unique_map(const DyadicInterval& from, const DyadicInterval& to, Orientation sign) {
  const int e = static_cast<int>(from.depth) - static_cast<int>(to.depth);
  const Rational scale = pow2(e);
  if (sign == Orientation::plus) return {sign, e, Rational(to.left() - scale * from.left())};
  return {sign, e, Rational(to.right() + scale * from.left())};
}

std::optional<DyadicInterval> intersect(const DyadicInterval& x, const DyadicInterval& y) {
  if (x.contains(y)) return y;
  if (y.contains(x)) return x;
  return std::nullopt;
}

std::optional<DyadicInterval> interval_from_endpoints(const Rational& lo, const Rational& hi) {
  if (lo < -1 || hi > 1 || hi <= lo) return std::nullopt;
  const auto log_len = log2_exact(Rational(hi - lo));
  if (!log_len || *log_len > 1) return std::nullopt;
  const int depth = 1 - *log_len;
  if (depth > static_cast<int>(DyadicInterval::kMaxDepth)) return std::nullopt;
  const Rational cells = (lo + 1) / Rational(hi - lo);
  if (cells.get_den() != 1) return std::nullopt;
  return DyadicInterval(static_cast<unsigned>(depth), cells.get_num().get_ui());
}

DyadicInterval image(const SignedAffineMap& phi, const DyadicInterval& x) {
  Rational lo = phi(x.left());
  Rational hi = phi(x.right());
  if (hi < lo) std::swap(lo, hi);
  const auto result = interval_from_endpoints(lo, hi);
  if (!result) {
    throw DyadicError("image [" + lo.get_str() + "," + hi.get_str() +
                      "] is not a standard dyadic interval");
  }
  return *result;
}

DyadicInterval preimage(const SignedAffineMap& phi, const DyadicInterval& y) {
  return image(phi.inverse(), y);
}

DyadicInterval reflect(const DyadicInterval& x) {
  return {x.depth, ((std::uint64_t{1} << x.depth) - 1) - x.index};
}

DyadicInterval transport(const DyadicInterval& sub, const DyadicInterval& from,
                         const DyadicInterval& to, Orientation sign) {
  if (!from.contains(sub)) throw DyadicError("transport: interval not nested in source");
  const unsigned k = sub.depth - from.depth;
  if (to.depth + k > DyadicInterval::kMaxDepth) throw DyadicError("transport: depth overflow");
  const std::uint64_t offset = sub.index - (from.index << k);
  const std::uint64_t cell = sign == Orientation::plus ? offset : ((std::uint64_t{1} << k) - 1) - offset;
  return {to.depth + k, (to.index << k) + cell};
}

}  // namespace o2
