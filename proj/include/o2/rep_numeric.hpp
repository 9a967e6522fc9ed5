#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "o2/algebra.hpp"

namespace o2 {

/// Step functions on the depth-d cells of [-1,1], with orthonormal basis
/// e_{d,j} = 2^((d-1)/2) * indicator(D(d,j)).
struct StepSpace {
  unsigned depth = 0;
  std::uint64_t dimension() const { return std::uint64_t{1} << depth; }
};

/// Exact sparse matrix StepSpace(source) -> StepSpace(target).
/// Zero entries are never stored.
class NumericOperator {
 public:
  using Index = std::uint64_t;
  using Entries = std::map<std::pair<Index, Index>, Scalar>;  // (row, col)

  NumericOperator(unsigned source_depth, unsigned target_depth)
      : source_{source_depth}, target_{target_depth} {}

  static NumericOperator identity(unsigned depth);
  /// The isometry e_{d,j} -> (e_{d+1,2j} + e_{d+1,2j+1})/sqrt2, iterated.
  static NumericOperator refinement(unsigned from_depth, unsigned to_depth);

  StepSpace source() const { return source_; }
  StepSpace target() const { return target_; }
  Index rows() const { return target_.dimension(); }
  Index cols() const { return source_.dimension(); }

  Scalar at(Index row, Index col) const;
  void add(Index row, Index col, const Scalar& value);
  const Entries& entries() const { return entries_; }

  /// Conjugate transpose.
  NumericOperator adjoint() const;
  /// refinement(target, depth) * (*this).
  NumericOperator embed_target(unsigned depth) const;

  /// Throws std::invalid_argument on mismatched depths.
  friend NumericOperator operator*(const NumericOperator& x, const NumericOperator& y);
  friend NumericOperator operator+(const NumericOperator& x, const NumericOperator& y);
  friend NumericOperator operator-(const NumericOperator& x, const NumericOperator& y);
  friend bool operator==(const NumericOperator&, const NumericOperator&);

  /// One row per line, entries separated by spaces.
  std::string to_dense_string() const;
  /// `(row, col, scalar)` per line in row-major order.
  std::string to_sparse_string() const;

 private:
  StepSpace source_;
  StepSpace target_;
  Entries entries_;
};

/// Matrix of x restricted to StepSpace(source_depth); the target depth is
/// the smallest that holds every term's image.
/// Throws DepthTooSmall if source_depth < x.depth().
NumericOperator matrix_of(const AlgebraElement& x, unsigned source_depth);

/// Compares matrix_of at a common source depth after embedding both into a
/// common target depth. Throws DepthTooSmall if depth < max depth of x, y.
bool numeric_equals(const AlgebraElement& x, const AlgebraElement& y, unsigned depth);

/// Letters of a word in the odometer representation on l^2(N):
/// T1 e_n = e_2n, T2 e_n = e_2n+1.
enum class OdometerLetter { T1, T2, T1adj, T2adj };

/// Dense integer N x N matrix.
class OdometerMatrix {
 public:
  explicit OdometerMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}

  std::size_t size() const { return n_; }
  int at(std::size_t row, std::size_t col) const { return cells_[row * n_ + col]; }
  int& at(std::size_t row, std::size_t col) { return cells_[row * n_ + col]; }

  friend OdometerMatrix operator*(const OdometerMatrix& x, const OdometerMatrix& y);
  friend OdometerMatrix operator+(const OdometerMatrix& x, const OdometerMatrix& y);
  friend bool operator==(const OdometerMatrix&, const OdometerMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<int> cells_;
};

/// Product of the N x N truncations of the letters, leftmost letter applied
/// last. Images at index >= N are dropped, so columns n < N / 2^len(word)
/// are exact. Throws std::invalid_argument if n < 2.
OdometerMatrix odometer(std::span<const OdometerLetter> word, std::size_t n);

/// Precomputed commutation test of diagonal 0/1 projections against every
/// V+(I,J) with I, J standard of equal depth <= d.
class DiagonalCommutant {
 public:
  explicit DiagonalCommutant(unsigned depth);

  unsigned depth() const { return depth_; }
  /// chi has 2^depth entries in {0,1}.
  bool commutes(std::span<const int> chi) const;

 private:
  unsigned depth_;
  std::vector<NumericOperator> translations_;
};

bool diagonal_commutant_test(std::span<const int> chi, unsigned depth);

/// All 0/1 vectors of length 2^depth passing the test (brute force).
std::vector<std::vector<int>> commuting_diagonal_projections(unsigned depth);

}  // namespace o2
