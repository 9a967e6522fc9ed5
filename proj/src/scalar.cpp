#include "o2/scalar.hpp"

#include <cctype>
#include <ostream>
#include <string>

#include "o2/errors.hpp"

namespace o2 {

namespace {

// (p + q*sqrt2)(p' + q'*sqrt2)
void real_mul(const Rational& p, const Rational& q, const Rational& p2, const Rational& q2,
              Rational& out_p, Rational& out_q) {
  out_p = p * p2 + 2 * q * q2;
  out_q = p * q2 + q * p2;
}

void append_term(std::string& out, const Rational& coeff, const char* suffix) {
  if (sgn(coeff) == 0) return;
  std::string term;
  if (*suffix == '\0') {
    term = coeff.get_str();
  } else if (coeff == 1) {
    term = suffix;
  } else if (coeff == -1) {
    term = std::string("-") + suffix;
  } else {
    term = coeff.get_str() + "*" + suffix;
  }
  if (!out.empty() && term.front() != '-') out += '+';
  out += term;
}

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    Scalar value = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
    return value;
  }

 private:
  Scalar expr() {
    Scalar value = term();
    for (;;) {
      skip_space();
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  Scalar term() {
    Scalar value = unary();
    for (;;) {
      skip_space();
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        value = value / unary();
      } else {
        return value;
      }
    }
  }

  Scalar unary() {
    skip_space();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return atom();
  }

  Scalar atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Scalar value = expr();
      skip_space();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Scalar(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "r2") return Scalar::sqrt2();
      if (name == "i") return Scalar::imag();
      throw UnknownSymbol(std::string(name), start);
    }
    throw ParseError("unexpected character", pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar::Scalar(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  a_.canonicalize();
  b_.canonicalize();
  c_.canonicalize();
  d_.canonicalize();
}

Scalar Scalar::sqrt2_pow(int k) {
  // sqrt2^k = 2^(k/2) for even k, 2^((k-1)/2) * sqrt2 for odd k.
  const int half = k >= 0 ? k / 2 : -((-k + 1) / 2);
  const bool odd = (k - 2 * half) != 0;
  Rational pow2 = 1;
  if (half >= 0) {
    mpz_class num = 1;
    num <<= half;
    pow2 = Rational(num);
  } else {
    mpz_class den = 1;
    den <<= -half;
    pow2 = Rational(mpz_class(1), den);
    pow2.canonicalize();
  }
  return odd ? Scalar(0, pow2) : Scalar(pow2);
}

Scalar& Scalar::operator+=(const Scalar& y) {
  a_ += y.a_;
  b_ += y.b_;
  c_ += y.c_;
  d_ += y.d_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& y) {
  a_ -= y.a_;
  b_ -= y.b_;
  c_ -= y.c_;
  d_ -= y.d_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& y) {
  // (x + iy)(x' + iy') = (xx' - yy') + i(xy' + yx'), x,y in Q(sqrt2).
  Rational p1, q1, p2, q2, p3, q3, p4, q4;
  real_mul(a_, b_, y.a_, y.b_, p1, q1);
  real_mul(c_, d_, y.c_, y.d_, p2, q2);
  real_mul(a_, b_, y.c_, y.d_, p3, q3);
  real_mul(c_, d_, y.a_, y.b_, p4, q4);
  a_ = p1 - p2;
  b_ = q1 - q2;
  c_ = p3 + p4;
  d_ = q3 + q4;
  return *this;
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * inv(y); }

Scalar Scalar::operator-() const { return Scalar(-a_, -b_, -c_, -d_); }

std::string Scalar::to_string() const {
  std::string out;
  append_term(out, a_, "");
  append_term(out, b_, "r2");
  append_term(out, c_, "i");
  append_term(out, d_, "i*r2");
  return out.empty() ? "0" : out;
}

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).parse(); }

Scalar add(const Scalar& x, const Scalar& y) { return x + y; }
Scalar mul(const Scalar& x, const Scalar& y) { return x * y; }
Scalar neg(const Scalar& x) { return -x; }

Scalar conj(const Scalar& x) { return Scalar(x.a(), x.b(), -x.c(), -x.d()); }

Scalar inv(const Scalar& x) {
  if (x.is_zero()) throw DivisionByZero();
  // 1/(u + iv) = (u - iv) / (u^2 + v^2); the norm lies in Q(sqrt2) and is
  // inverted by rationalizing with its sqrt2-conjugate.
  Rational n0, n1, m0, m1;
  real_mul(x.a(), x.b(), x.a(), x.b(), n0, n1);
  real_mul(x.c(), x.d(), x.c(), x.d(), m0, m1);
  n0 += m0;
  n1 += m1;
  const Rational denom = n0 * n0 - 2 * n1 * n1;
  const Scalar norm_inv(n0 / denom, -n1 / denom);
  return conj(x) * norm_inv;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

}  // namespace o2
