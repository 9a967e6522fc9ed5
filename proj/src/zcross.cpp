#include "o2/zcross.hpp"

#include "o2/errors.hpp"

namespace o2 {

namespace {

template <typename Op>
SampledField pointwise(const SampledField& x, const SampledField& y, Op op) {
  SampledField::Values out;
  for (std::size_t k = 0; k < kGridSize; ++k) out[k] = op(x.at(k), y.at(k));
  return SampledField(std::move(out));
}

SampledField::Values constant_values(const AlgebraElement& x) {
  SampledField::Values out;
  out.fill(x);
  return out;
}

}  // namespace

std::string grid_label(std::size_t k) {
  static constexpr std::array<const char*, kGridSize> labels{"-1", "-1/2", "0", "1/2", "1"};
  return labels.at(k);
}

Scalar grid_phase(std::size_t k) {
  const Scalar root_half = inv(Scalar::sqrt2());
  switch (k) {
    case 0:
      return -Scalar::imag();
    case 1:
      return root_half * (Scalar(1) - Scalar::imag());
    case 2:
      return Scalar(1);
    case 3:
      return root_half * (Scalar(1) + Scalar::imag());
    case 4:
      return Scalar::imag();
    default:
      throw std::out_of_range("grid point out of range");
  }
}

SampledField::SampledField(Values values) : values_(std::move(values)) {
  if (!(values_.front() == sigma_hat(values_.back()))) {
    throw BoundaryViolation("sampled field violates f(-1) = sigma_hat(f(1))");
  }
}

SampledField SampledField::constant(const AlgebraElement& x) {
  return SampledField(constant_values(x));
}

SampledField operator+(const SampledField& x, const SampledField& y) {
  return pointwise(x, y, [](const auto& a, const auto& b) { return a + b; });
}

SampledField operator-(const SampledField& x, const SampledField& y) {
  return pointwise(x, y, [](const auto& a, const auto& b) { return a - b; });
}

SampledField operator*(const SampledField& x, const SampledField& y) {
  return pointwise(x, y, [](const auto& a, const auto& b) { return a * b; });
}

SampledField adjoint(const SampledField& x) {
  SampledField::Values out;
  for (std::size_t k = 0; k < kGridSize; ++k) out[k] = adjoint(x.at(k));
  return SampledField(std::move(out));
}

SampledField field_v() {
  SampledField::Values out;
  const auto w = gen::W();
  for (std::size_t k = 0; k < kGridSize; ++k) out[k] = grid_phase(k) * w;
  return SampledField(std::move(out));
}

SampledField field_s1() { return SampledField::constant(gen::S1()); }
SampledField field_s2() { return SampledField::constant(gen::S2()); }

bool FieldReport::ok() const {
  for (const auto& check : checks) {
    if (!check.passed) return false;
  }
  return true;
}

std::string FieldReport::to_string() const {
  std::string out;
  for (const auto& check : checks) {
    out += std::string(check.passed ? "PASS" : "FAIL") + " t=" + grid_label(check.point) + " " +
           check.name + "\n";
  }
  return out;
}

FieldReport check_covariance() {
  const SampledField v = field_v();
  const SampledField v_adj = adjoint(v);
  const SampledField s1 = field_s1();
  const SampledField s2 = field_s2();
  const SampledField conj_s1 = v * s1 * v_adj;
  const SampledField conj_s2 = v * s2 * v_adj;
  FieldReport report;
  for (std::size_t k = 0; k < kGridSize; ++k) {
    report.checks.push_back({"v s1 v* = s2", k, conj_s1.at(k) == s2.at(k)});
    report.checks.push_back({"v s2 v* = s1", k, conj_s2.at(k) == s1.at(k)});
  }
  return report;
}

FieldReport corollary_form(const SampledField& f) {
  const auto sum = f.at(4) + f.at(0);
  const auto diff = f.at(4) - f.at(0);
  FieldReport report;
  report.checks.push_back({"f(1)+f(-1) symmetric", 4, sigma_hat(sum) == sum});
  report.checks.push_back({"f(1)-f(-1) antisymmetric", 4, sigma_hat(diff) == -diff});
  return report;
}

}  // namespace o2
