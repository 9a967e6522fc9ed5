#pragma once

#include <array>
#include <string>
#include <vector>

#include "o2/algebra.hpp"

namespace o2 {

/// Sample points t = -1, -1/2, 0, 1/2, 1: exactly where exp(i*pi*t/2) lies
/// in Q(i, sqrt2).
inline constexpr std::size_t kGridSize = 5;

/// Text of grid point k ("-1", "-1/2", ...).
std::string grid_label(std::size_t k);

/// exp(i*pi*t/2) at grid point k.
Scalar grid_phase(std::size_t k);

/// An O2 x| Z2 valued function sampled on the grid, subject to the twisted
/// boundary condition f(-1) = sigma_hat(f(1)).
class SampledField {
 public:
  using Values = std::array<AlgebraElement, kGridSize>;

  /// Throws BoundaryViolation when values[0] != sigma_hat(values[4]).
  explicit SampledField(Values values);

  static SampledField constant(const AlgebraElement& x);

  const AlgebraElement& at(std::size_t k) const { return values_[k]; }
  const Values& values() const { return values_; }

  friend SampledField operator+(const SampledField& x, const SampledField& y);
  friend SampledField operator-(const SampledField& x, const SampledField& y);
  friend SampledField operator*(const SampledField& x, const SampledField& y);
  friend bool operator==(const SampledField&, const SampledField&) = default;

 private:
  Values values_;
};

SampledField adjoint(const SampledField& x);

/// v(t) = exp(i*pi*t/2) W.
SampledField field_v();
SampledField field_s1();
SampledField field_s2();

struct GridCheck {
  std::string name;
  std::size_t point = 0;
  bool passed = false;
};

struct FieldReport {
  std::vector<GridCheck> checks;
  bool ok() const;
  std::string to_string() const;
};

/// v s1 v* = s2 and v s2 v* = s1 at every grid point.
FieldReport check_covariance();

/// f(1) + f(-1) is sigma_hat-fixed and f(1) - f(-1) is sigma_hat-odd.
FieldReport corollary_form(const SampledField& f);

}  // namespace o2
