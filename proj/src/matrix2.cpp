#include "o2/matrix2.hpp"

namespace o2 {

Mat2 operator+(const Mat2& x, const Mat2& y) {
  return {x.at(1, 1) + y.at(1, 1), x.at(1, 2) + y.at(1, 2), x.at(2, 1) + y.at(2, 1),
          x.at(2, 2) + y.at(2, 2)};
}

Mat2 operator-(const Mat2& x, const Mat2& y) {
  return {x.at(1, 1) - y.at(1, 1), x.at(1, 2) - y.at(1, 2), x.at(2, 1) - y.at(2, 1),
          x.at(2, 2) - y.at(2, 2)};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.at(1, 1) * y.at(1, 1) + x.at(1, 2) * y.at(2, 1),
          x.at(1, 1) * y.at(1, 2) + x.at(1, 2) * y.at(2, 2),
          x.at(2, 1) * y.at(1, 1) + x.at(2, 2) * y.at(2, 1),
          x.at(2, 1) * y.at(1, 2) + x.at(2, 2) * y.at(2, 2)};
}

Mat2 operator*(const Scalar& c, const Mat2& x) {
  return {c * x.at(1, 1), c * x.at(1, 2), c * x.at(2, 1), c * x.at(2, 2)};
}

Mat2 adjoint(const Mat2& x) {
  return {adjoint(x.at(1, 1)), adjoint(x.at(2, 1)), adjoint(x.at(1, 2)), adjoint(x.at(2, 2))};
}

bool equals(const Mat2& x, const Mat2& y) { return x == y; }

Mat2 tau_conj(const Mat2& x) { return {x.at(1, 1), -x.at(1, 2), -x.at(2, 1), x.at(2, 2)}; }

bool has_lemma_form(const Mat2& x) {
  for (int r = 1; r <= 2; ++r) {
    for (int c = 1; c <= 2; ++c) {
      if (!in_O2(x.at(r, c))) return false;
    }
  }
  return x.at(2, 2) == sigma(x.at(1, 1)) && x.at(2, 1) == sigma(x.at(1, 2));
}

std::string to_string(const Mat2& x) {
  std::string out;
  for (int r = 1; r <= 2; ++r) {
    for (int c = 1; c <= 2; ++c) {
      out += "(" + std::to_string(r) + "," + std::to_string(c) + ")\n";
      const std::string entry = serialize(x.at(r, c));
      out += entry.empty() ? "0\n" : entry;
    }
  }
  return out;
}

namespace mat {

Mat2 Tmat1() {
  return inv(Scalar::sqrt2()) * Mat2(gen::S1(), gen::S2(), gen::S1(), gen::S2());
}

Mat2 Tmat2() {
  return inv(Scalar::sqrt2()) * Mat2(gen::S1(), -gen::S2(), -gen::S1(), gen::S2());
}

Mat2 Xi() { return {{}, gen::one(), gen::one(), {}}; }
Mat2 Z() { return Mat2::diag(gen::one(), -gen::one()); }
Mat2 R1() { return Mat2::diag(gen::S1(), gen::S2()); }
Mat2 R2() { return Mat2::diag(gen::S2(), gen::S1()); }

Mat2 Ymat() {
  const Mat2 t1 = Tmat1();
  const Mat2 t2 = Tmat2();
  return t1 * adjoint(t1) - t2 * adjoint(t2);
}

}  // namespace mat

}  // namespace o2
