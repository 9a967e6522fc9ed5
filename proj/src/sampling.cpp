#include "o2/sampling.hpp"

#include <array>

namespace o2 {

namespace {

std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

}  // namespace

Scalar random_scalar(std::mt19937_64& rng) {
  static const std::array<Scalar, 12> pool{
      Scalar(1),
      Scalar(-1),
      Scalar(2),
      Scalar(Rational(1, 2)),
      Scalar(Rational(-3, 4)),
      Scalar::sqrt2(),
      inv(Scalar::sqrt2()),
      Scalar::imag(),
      -Scalar::imag(),
      (Scalar(1) + Scalar::imag()) * inv(Scalar::sqrt2()),
      Scalar(1) + Scalar::sqrt2(),
      Scalar(Rational(1, 3), 0, Rational(-2), Rational(1, 5)),
  };
  return pool[uniform(rng, 0, pool.size() - 1)];
}

DyadicInterval random_interval(std::mt19937_64& rng, unsigned max_depth) {
  const auto depth = static_cast<unsigned>(uniform(rng, 0, max_depth));
  return DyadicInterval(depth, uniform(rng, 0, (std::uint64_t{1} << depth) - 1));
}

AlgebraElement random_element(std::mt19937_64& rng, const SampleShape& shape) {
  const auto count = uniform(rng, 1, shape.max_terms);
  std::vector<AlgebraElement::Term> terms;
  for (std::uint64_t n = 0; n < count; ++n) {
    const Orientation eps =
        shape.crossed && uniform(rng, 0, 1) == 1 ? Orientation::minus : Orientation::plus;
    const DyadicInterval target = random_interval(rng, shape.max_depth);
    const DyadicInterval source = random_interval(rng, shape.max_depth);
    terms.emplace_back(BasisIsometry{target, source, eps}, random_scalar(rng));
  }
  return AlgebraElement::from_terms(terms);
}

}  // namespace o2
