#pragma once

#include <array>
#include <string>

#include "o2/algebra.hpp"

namespace o2 {

/// 2x2 matrix over AlgebraElement, row-major. Equality is entrywise.
class Mat2 {
 public:
  Mat2() = default;
  Mat2(AlgebraElement a11, AlgebraElement a12, AlgebraElement a21, AlgebraElement a22)
      : e_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)} {}

  static Mat2 identity() { return diag(gen::one(), gen::one()); }
  static Mat2 diag(AlgebraElement a, AlgebraElement b) { return {std::move(a), {}, {}, std::move(b)}; }

  /// 1-based, as in (1,1)...(2,2).
  const AlgebraElement& at(int row, int col) const { return e_[(row - 1) * 2 + (col - 1)]; }

  friend Mat2 operator+(const Mat2& x, const Mat2& y);
  friend Mat2 operator-(const Mat2& x, const Mat2& y);
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend Mat2 operator*(const Scalar& c, const Mat2& x);
  friend bool operator==(const Mat2&, const Mat2&) = default;

 private:
  std::array<AlgebraElement, 4> e_;
};

Mat2 adjoint(const Mat2& x);
bool equals(const Mat2& x, const Mat2& y);

/// Z X Z with Z = diag(1,-1).
Mat2 tau_conj(const Mat2& x);

/// True iff x = [[A1, A2], [sigma(A2), sigma(A1)]] with A1, A2 in O2.
bool has_lemma_form(const Mat2& x);

/// Entries labelled (1,1)...(2,2), each in element serialization.
std::string to_string(const Mat2& x);

namespace mat {

/// (1/sqrt2)[[S1, S2], [S1, S2]]
Mat2 Tmat1();
/// (1/sqrt2)[[S1, -S2], [-S1, S2]]
Mat2 Tmat2();
/// [[0,1],[1,0]]
Mat2 Xi();
/// diag(1,-1)
Mat2 Z();
/// diag(S1, S2)
Mat2 R1();
/// diag(S2, S1)
Mat2 R2();
/// Tmat1 Tmat1* - Tmat2 Tmat2*, the image of U.
Mat2 Ymat();

}  // namespace mat

}  // namespace o2
