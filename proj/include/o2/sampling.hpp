#pragma once

#include <random>

#include "o2/algebra.hpp"

namespace o2 {

struct SampleShape {
  unsigned max_depth = 4;
  unsigned max_terms = 4;
  /// Allow orientation-reversing terms (crossed product elements).
  bool crossed = true;
};

/// A coefficient drawn from a small pool of nonzero values in Q(i,sqrt2).
Scalar random_scalar(std::mt19937_64& rng);

/// Random standard interval of depth <= max_depth.
DyadicInterval random_interval(std::mt19937_64& rng, unsigned max_depth);

/// Sum of 1..max_terms random weighted basis keys (may cancel to zero).
AlgebraElement random_element(std::mt19937_64& rng, const SampleShape& shape = {});

}  // namespace o2
