#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "o2/dyadic.hpp"

namespace o2 {

/// The partial isometry V^e(I,J) = P_I pi_phi P_J on L^2[-1,1], where phi is
/// the affine bijection of orientation e mapping I onto J and
/// (pi_phi f)(t) = |phi'|^(1/2) f(phi(t)).
///
/// Final space L^2(I), initial space L^2(J). The |phi'|^(1/2) normalisation
/// belongs to the key, never to a coefficient.
struct BasisIsometry {
  DyadicInterval target;
  DyadicInterval source;
  Orientation orientation = Orientation::plus;

  unsigned depth() const { return target.depth > source.depth ? target.depth : source.depth; }
  SignedAffineMap map() const { return unique_map(target, source, orientation); }

  /// V+(D(d,j),D(d',j')) or V-(...).
  std::string to_string() const;
  static BasisIsometry parse(std::string_view text);

  friend bool operator==(const BasisIsometry&, const BasisIsometry&) = default;
};

/// Total order used for serialization: orientation (+ first), then target,
/// then source, each by (depth, index).
bool operator<(const BasisIsometry& x, const BasisIsometry& y);

/// Product xy; nullopt is the zero operator.
std::optional<BasisIsometry> compose(const BasisIsometry& x, const BasisIsometry& y);

BasisIsometry adjoint(const BasisIsometry& x);

/// Halve the source projection: the two returned keys sum to x.
/// Throws ResourceError when the children would exceed max_depth.
std::pair<BasisIsometry, BasisIsometry> split(const BasisIsometry& x,
                                              unsigned max_depth = DyadicInterval::kMaxDepth);

/// The key whose split() produces x, if there is one.
std::optional<BasisIsometry> parent(const BasisIsometry& x);

/// The other half of split(*parent(x)). Precondition: parent(x) exists.
BasisIsometry sibling(const BasisIsometry& x);

BasisIsometry projection(const DyadicInterval& x);

}  // namespace o2
