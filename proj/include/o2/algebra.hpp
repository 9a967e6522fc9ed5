#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "o2/pisometry.hpp"
#include "o2/scalar.hpp"

namespace o2 {

struct Limits {
  static constexpr unsigned kDefaultMaxDepth = 24;
  /// Largest interval depth any product may create before ResourceError.
  unsigned max_depth = kDefaultMaxDepth;
};

/// Finite Q(i,sqrt2)-linear combination of basis partial isometries: an
/// element of O2 x| Z2 (the orientation-preserving part is O2 itself).
///
/// The term map is always canonical:
///   - no zero coefficients;
///   - keys that are split-refinements of one another (same affine map,
///     nested targets) never coexist;
///   - no two siblings of a common parent key share a coefficient.
/// Under these rules every operator has exactly one representation, so
/// equality is term-map equality.
class AlgebraElement {
 public:
  using Term = std::pair<BasisIsometry, Scalar>;
  using TermMap = std::map<BasisIsometry, Scalar>;

  AlgebraElement() = default;
  explicit AlgebraElement(const BasisIsometry& key, const Scalar& coeff = 1);

  /// Sum of arbitrary (possibly overlapping, possibly zero) terms.
  static AlgebraElement from_terms(const std::vector<Term>& terms);
  static AlgebraElement scalar(const Scalar& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Deepest interval occurring in any key (0 for the zero element).
  unsigned depth() const;
  /// The c with *this == c * 1, if any.
  std::optional<Scalar> as_scalar() const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);

  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& x);
  AlgebraElement operator-() const;

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  explicit AlgebraElement(TermMap canonical) : terms_(std::move(canonical)) {}
  static TermMap canonicalize(TermMap raw);

  friend AlgebraElement mul(const AlgebraElement&, const AlgebraElement&, const Limits&);
  friend AlgebraElement adjoint(const AlgebraElement&);
  friend AlgebraElement sigma(const AlgebraElement&);

  TermMap terms_;
};

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement neg(const AlgebraElement& x);
AlgebraElement scalar_mul(const Scalar& c, const AlgebraElement& x);
/// Throws ResourceError if a product key exceeds limits.max_depth.
AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y, const Limits& limits = {});
AlgebraElement adjoint(const AlgebraElement& x);
bool equals(const AlgebraElement& x, const AlgebraElement& y);

/// The flip automorphism S1 <-> S2, realised as conjugation by the
/// reflection t -> -t: V(I,J) -> V(-I,-J).
AlgebraElement sigma(const AlgebraElement& x);
/// Dual automorphism: identity on O2, W -> -W.
AlgebraElement sigma_hat(const AlgebraElement& x);

/// (x + sigma(x))/2 and (x - sigma(x))/2.
AlgebraElement fixed_part(const AlgebraElement& x);
AlgebraElement anti_part(const AlgebraElement& x);

/// x = f + g W with f, g in O2.
std::pair<AlgebraElement, AlgebraElement> to_pair(const AlgebraElement& x);

bool in_O2(const AlgebraElement& x);
bool is_symmetric(const AlgebraElement& x);
bool is_antisymmetric(const AlgebraElement& x);

/// One `<scalar> V<sign>(D(d,j),D(d',j'))` line per term in key order.
/// The zero element serializes to the empty string.
std::string serialize(const AlgebraElement& x);
AlgebraElement parse_element(std::string_view text);

namespace gen {

AlgebraElement one();
AlgebraElement zero();
/// S1 f(t) = sqrt2 f(2t-1): V+([0,1],[-1,1]).
AlgebraElement S1();
/// S2 f(t) = sqrt2 f(2t+1): V+([-1,0],[-1,1]).
AlgebraElement S2();
/// W f(t) = f(-t).
AlgebraElement W();
/// S1 S1* - S2 S2*.
AlgebraElement U();
/// (S1 + S2)/sqrt2.
AlgebraElement T();
/// U T U; together with T generates the sigma-fixed subalgebra.
AlgebraElement Vgen();
/// (S1 + W S1)/sqrt2 and (S1 - W S1)/sqrt2: Cuntz generators of the
/// crossed product.
AlgebraElement B1();
AlgebraElement B2();

}  // namespace gen

}  // namespace o2
