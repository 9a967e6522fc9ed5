#include <doctest.h>

#include <random>

#include "o2/errors.hpp"
#include "o2/pisometry.hpp"
#include "oracles.hpp"

using namespace o2;

namespace {

const DyadicInterval whole = DyadicInterval::whole();
const DyadicInterval left{1, 0};
const DyadicInterval right{1, 1};
constexpr auto plus = Orientation::plus;
constexpr auto minus = Orientation::minus;

BasisIsometry random_key(std::mt19937_64& rng) {
  return {random_interval(rng, 4), random_interval(rng, 4),
          std::uniform_int_distribution<int>(0, 1)(rng) ? plus : minus};
}

AlgebraElement as_element(const std::optional<BasisIsometry>& x) {
  return x ? AlgebraElement(*x) : AlgebraElement();
}

}  // namespace

TEST_SUITE("pisometry") {

TEST_CASE("compose examples") {
  const BasisIsometry s1{right, whole, plus};
  const BasisIsometry s2{left, whole, plus};
  CHECK(compose(adjoint(s1), s1) == BasisIsometry{whole, whole, plus});
  CHECK_FALSE(compose(adjoint(s1), s2).has_value());
  const auto p = projection(right);
  CHECK(compose(p, p) == p);
  // reflection twice
  const BasisIsometry w{whole, whole, minus};
  CHECK(compose(w, w) == BasisIsometry{whole, whole, plus});
}

TEST_CASE("adjoint examples") {
  CHECK(adjoint(BasisIsometry{right, whole, plus}) == BasisIsometry{whole, right, plus});
  const BasisIsometry w{whole, whole, minus};
  CHECK(adjoint(w) == w);
}

TEST_CASE("split examples") {
  CHECK(split(BasisIsometry{whole, whole, plus}) ==
        std::pair{BasisIsometry{left, left, plus}, BasisIsometry{right, right, plus}});
  CHECK(split(BasisIsometry{whole, whole, minus}) ==
        std::pair{BasisIsometry{left, right, minus}, BasisIsometry{right, left, minus}});
  CHECK(split(BasisIsometry{right, whole, plus}) ==
        std::pair{BasisIsometry{{2, 2}, left, plus}, BasisIsometry{{2, 3}, right, plus}});
  CHECK_THROWS_AS(split(BasisIsometry{right, whole, plus}, 1), ResourceError);
}

TEST_CASE("parent and sibling") {
  const BasisIsometry x{{2, 2}, left, plus};
  CHECK(parent(x) == BasisIsometry{right, whole, plus});
  CHECK(sibling(x) == BasisIsometry{{2, 3}, right, plus});
  // mismatched sides under +: no parent
  CHECK_FALSE(parent(BasisIsometry{{2, 2}, right, plus}).has_value());
  CHECK_FALSE(parent(BasisIsometry{whole, right, plus}).has_value());
}

TEST_CASE("text") {
  const BasisIsometry x{right, whole, plus};
  CHECK(x.to_string() == "V+(D(1,1),D(0,0))");
  CHECK(BasisIsometry::parse("V-(D(2,1),D(1,0))") == BasisIsometry{{2, 1}, left, minus});
  CHECK_THROWS(BasisIsometry::parse("V*(D(0,0),D(0,0))"));
}

TEST_CASE("random key laws against the function model") {
  auto rng = oracle::rng(5);
  for (int n = 0; n < 300; ++n) {
    const auto x = random_key(rng);
    const auto y = random_key(rng);
    const auto z = random_key(rng);
    CHECK(adjoint(adjoint(x)) == x);
    CHECK(compose(x, adjoint(x)) == projection(x.target));
    CHECK(compose(adjoint(x), x) == projection(x.source));

    const auto xy = compose(x, y);
    const auto yx_adj = compose(adjoint(y), adjoint(x));
    CHECK(xy.has_value() == yx_adj.has_value());
    if (xy) CHECK(adjoint(*xy) == *yx_adj);

    std::optional<BasisIsometry> left_assoc;
    if (xy) left_assoc = compose(*xy, z);
    std::optional<BasisIsometry> right_assoc;
    if (const auto yz = compose(y, z)) right_assoc = compose(x, *yz);
    CHECK(left_assoc == right_assoc);

    // the product is the operator composite
    for (std::uint64_t k = 0; k < 64; k += 7) {
      const auto f = oracle::indicator(6, k);
      CHECK(oracle::same_function(oracle::apply(as_element(xy), f),
                                  oracle::apply(AlgebraElement(x), oracle::apply(AlgebraElement(y), f))));
    }

    const auto [a, b] = split(x);
    const std::vector<AlgebraElement::Term> halves{{a, 1}, {b, 1}};
    for (std::uint64_t k = 0; k < 64; k += 5) {
      const auto f = oracle::indicator(6, k);
      CHECK(oracle::same_function(oracle::apply_terms(halves, f), oracle::apply(AlgebraElement(x), f)));
    }
    CHECK(parent(a) == x);
    CHECK(parent(b) == x);
    CHECK(sibling(a) == b);
    CHECK(BasisIsometry::parse(x.to_string()) == x);
  }
}

}
