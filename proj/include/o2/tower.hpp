#pragma once

#include <optional>
#include <string>
#include <vector>

#include "o2/algebra.hpp"

namespace o2 {

/// One level of the self-similar tower: a Cuntz pair (r, t) and, when it is
/// available in the ambient algebra, the flip unitary w with w t = r w.
///
/// Levels reached by ascending carry no flip: the flip of level n+1 lives in
/// a crossed product of the current algebra and is only known once level
/// n+1 has itself been reached by descending from above.
struct TowerLevel {
  AlgebraElement r;
  AlgebraElement t;
  std::optional<AlgebraElement> w;
  int index = 0;
};

struct RelationCheck {
  std::string name;
  /// nullopt when the relation involves an absent flip.
  std::optional<bool> passed;
};

struct LevelReport {
  int index = 0;
  std::vector<RelationCheck> checks;

  /// Every applicable relation holds.
  bool ok() const;
  std::string to_string() const;
};

/// (S1, S2, W) at index 0.
TowerLevel base_level();

/// Checks w^2 = 1, w t = r w, r* r = 1, t* t = 1, r r* + t t* = 1 exactly.
LevelReport verify_level(const TowerLevel& level, const Limits& limits = {});

/// Level n-1: r' = (r+t)/sqrt2, w' = r r* - t t*, t' = w' r' w'.
/// Throws RelationViolation if the input fails verify_level.
TowerLevel descend(const TowerLevel& level, const Limits& limits = {});

/// Level n+1: r' = (r + w r)/sqrt2, t' = (r - w r)/sqrt2, no flip.
/// Throws RelationViolation if the input has no flip or fails verify_level.
TowerLevel ascend(const TowerLevel& level, const Limits& limits = {});

/// Serialized r, t, w blocks.
std::string to_string(const TowerLevel& level);

}  // namespace o2
