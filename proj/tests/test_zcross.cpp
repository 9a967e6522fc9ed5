#include <doctest.h>

#include "o2/errors.hpp"
#include "o2/zcross.hpp"
#include "oracles.hpp"

using namespace o2;

namespace {

const Scalar i = Scalar::imag();
const Scalar h = inv(Scalar::sqrt2());

}  // namespace

TEST_SUITE("zcross") {

TEST_CASE("grid") {
  CHECK(grid_label(0) == "-1");
  CHECK(grid_label(1) == "-1/2");
  CHECK(grid_label(4) == "1");
  CHECK(grid_phase(0) == -i);
  CHECK(grid_phase(1) == (Scalar(1) - i) * h);
  CHECK(grid_phase(2) == Scalar(1));
  CHECK(grid_phase(3) == (Scalar(1) + i) * h);
  CHECK(grid_phase(4) == i);
}

TEST_CASE("fields") {
  const auto v = field_v();
  CHECK(v.at(2) == gen::W());
  CHECK(v.at(4) == i * gen::W());
  CHECK(v.at(0) == -i * gen::W());
  CHECK(sigma_hat(v.at(4)) == v.at(0));
  CHECK(v * adjoint(v) == SampledField::constant(gen::one()));
  for (std::size_t k = 0; k < kGridSize; ++k) {
    const auto p = grid_phase(k);
    CHECK((v * v).at(k) == AlgebraElement::scalar(p * p));
  }
  CHECK_THROWS_AS(SampledField::constant(gen::W()), BoundaryViolation);
  SampledField::Values bad;
  bad.fill(gen::S1());
  bad[0] = gen::S2();
  CHECK_THROWS_AS(SampledField{bad}, BoundaryViolation);
}

TEST_CASE("covariance") {
  const auto report = check_covariance();
  CHECK(report.ok());
  CHECK(report.checks.size() == 2 * kGridSize);
  const auto v = field_v();
  const auto s1 = field_s1();
  const auto s2 = field_s2();
  CHECK((v * s1 * adjoint(v)).at(3) == gen::S2());
  CHECK((v * s2 * adjoint(v)).at(0) == gen::S1());
}

TEST_CASE("corollary form") {
  for (const auto& f : {field_v(), field_s1(), field_s2(), field_v() * field_s1()}) {
    CHECK(corollary_form(f).ok());
  }
}

TEST_CASE("random words stay valid") {
  auto rng = oracle::rng(51);
  const std::vector<SampledField> letters{field_v(), field_s1(), field_s2(),
                                          adjoint(field_v()), adjoint(field_s1()), adjoint(field_s2())};
  for (int n = 0; n < 50; ++n) {
    SampledField acc = SampledField::constant(gen::one());
    const int len = std::uniform_int_distribution<int>(1, 5)(rng);
    for (int k = 0; k < len; ++k) {
      const auto& l = letters[std::uniform_int_distribution<std::size_t>(0, letters.size() - 1)(rng)];
      CHECK_NOTHROW(acc = n % 2 ? acc * l : acc + l);
    }
    CHECK(acc.at(0) == sigma_hat(acc.at(4)));
  }
}

}
