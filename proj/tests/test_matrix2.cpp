#include <doctest.h>

#include <array>

#include "o2/matrix2.hpp"
#include "oracles.hpp"

using namespace o2;
using namespace o2::mat;

namespace {

Mat2 random_mat(std::mt19937_64& rng) {
  auto e = [&] { return random_element(rng, {3, 2, false}); };
  return {e(), e(), e(), e()};
}

Mat2 random_block(std::mt19937_64& rng) {
  const auto a = random_element(rng, {3, 2, false});
  const auto b = random_element(rng, {3, 2, false});
  return {a, b, sigma(b), sigma(a)};
}

}  // namespace

TEST_SUITE("matrix2") {

TEST_CASE("basic algebra") {
  auto rng = oracle::rng(41);
  for (int n = 0; n < 20; ++n) {
    const auto x = random_mat(rng);
    CHECK(Mat2::identity() * x == x);
    CHECK(adjoint(adjoint(x)) == x);
    CHECK(tau_conj(tau_conj(x)) == x);
  }
  CHECK(Z() * Z() == Mat2::identity());
}

TEST_CASE("generator identities") {
  const auto id = Mat2::identity();
  CHECK(adjoint(Tmat1()) * Tmat1() == id);
  CHECK(adjoint(Tmat2()) * Tmat2() == id);
  CHECK(Tmat1() * adjoint(Tmat1()) + Tmat2() * adjoint(Tmat2()) == id);
  CHECK(Ymat() == Xi());
  CHECK(R2() == Ymat() * R1() * Ymat());
  CHECK(tau_conj(Tmat1()) == Tmat2());
}

TEST_CASE("block form") {
  CHECK(has_lemma_form(Tmat1()));
  CHECK(has_lemma_form(Tmat2()));
  CHECK_FALSE(has_lemma_form(Z()));
  CHECK_FALSE(has_lemma_form(Mat2::diag(gen::W(), gen::W())));
  auto rng = oracle::rng(42);
  for (int n = 0; n < 40; ++n) {
    const auto x = random_block(rng);
    const auto y = random_block(rng);
    CHECK(has_lemma_form(x));
    CHECK(has_lemma_form(x + y));
    CHECK(has_lemma_form(x * y));
    CHECK(has_lemma_form(adjoint(x)));
    const auto a = random_element(rng, {3, 3, false});
    const auto d = Mat2::diag(a, sigma(a));
    CHECK(tau_conj(d) == d);
  }
}

TEST_CASE("words in T1, T2 and adjoints") {
  const std::array<Mat2, 4> letters{Tmat1(), Tmat2(), adjoint(Tmat1()), adjoint(Tmat2())};
  std::vector<Mat2> frontier{Mat2::identity()};
  int count = 0;
  for (int len = 1; len <= 4; ++len) {
    std::vector<Mat2> next;
    for (const auto& w : frontier) {
      for (const auto& l : letters) next.push_back(w * l);
    }
    frontier = std::move(next);
    for (const auto& w : frontier) {
      ++count;
      CHECK(has_lemma_form(w));
      // tau fixes exactly the words with vanishing off-diagonal entries
      const bool diagonal = w.at(1, 2).is_zero() && w.at(2, 1).is_zero();
      CHECK((tau_conj(w) == w) == diagonal);
    }
  }
  CHECK(count == 340);
}

TEST_CASE("text") {
  const auto s = to_string(Xi());
  CHECK(s == "(1,1)\n0\n(1,2)\n1 V+(D(0,0),D(0,0))\n(2,1)\n1 V+(D(0,0),D(0,0))\n(2,2)\n0\n");
}

}
