#include "o2/rep_numeric.hpp"

#include <algorithm>
#include <stdexcept>

#include "o2/errors.hpp"

namespace o2 {

NumericOperator NumericOperator::identity(unsigned depth) {
  NumericOperator out(depth, depth);
  for (Index j = 0; j < out.cols(); ++j) out.entries_.emplace(std::pair{j, j}, Scalar(1));
  return out;
}

NumericOperator NumericOperator::refinement(unsigned from_depth, unsigned to_depth) {
  return identity(from_depth).embed_target(to_depth);
}

Scalar NumericOperator::at(Index row, Index col) const {
  const auto it = entries_.find({row, col});
  return it == entries_.end() ? Scalar() : it->second;
}

void NumericOperator::add(Index row, Index col, const Scalar& value) {
  if (row >= rows() || col >= cols()) throw std::out_of_range("matrix index out of range");
  auto [it, inserted] = entries_.try_emplace({row, col}, value);
  if (!inserted) it->second += value;
  if (it->second.is_zero()) entries_.erase(it);
}

NumericOperator NumericOperator::adjoint() const {
  NumericOperator out(target_.depth, source_.depth);
  for (const auto& [pos, value] : entries_) out.entries_.emplace(std::pair{pos.second, pos.first}, conj(value));
  return out;
}

NumericOperator NumericOperator::embed_target(unsigned depth) const {
  if (depth < target_.depth) throw std::invalid_argument("embed_target: depth decreases");
  const unsigned k = depth - target_.depth;
  if (k == 0) return *this;
  const Scalar factor = Scalar::sqrt2_pow(-static_cast<int>(k));
  NumericOperator out(source_.depth, depth);
  for (const auto& [pos, value] : entries_) {
    const Scalar scaled = value * factor;
    for (Index m = 0; m < (Index{1} << k); ++m) {
      out.entries_.emplace(std::pair{(pos.first << k) + m, pos.second}, scaled);
    }
  }
  return out;
}

NumericOperator operator*(const NumericOperator& x, const NumericOperator& y) {
  if (x.source_.depth != y.target_.depth) {
    throw std::invalid_argument("matrix product: source depth " + std::to_string(x.source_.depth) +
                                " != target depth " + std::to_string(y.target_.depth));
  }
  std::map<NumericOperator::Index, std::vector<std::pair<NumericOperator::Index, const Scalar*>>>
      by_col;
  for (const auto& [pos, value] : x.entries_) by_col[pos.second].emplace_back(pos.first, &value);
  NumericOperator out(y.source_.depth, x.target_.depth);
  for (const auto& [pos, value] : y.entries_) {
    const auto it = by_col.find(pos.first);
    if (it == by_col.end()) continue;
    for (const auto& [row, xval] : it->second) out.add(row, pos.second, *xval * value);
  }
  return out;
}

NumericOperator operator+(const NumericOperator& x, const NumericOperator& y) {
  if (x.source_.depth != y.source_.depth || x.target_.depth != y.target_.depth) {
    throw std::invalid_argument("matrix sum: depth mismatch");
  }
  NumericOperator out = x;
  for (const auto& [pos, value] : y.entries_) out.add(pos.first, pos.second, value);
  return out;
}

NumericOperator operator-(const NumericOperator& x, const NumericOperator& y) {
  if (x.source_.depth != y.source_.depth || x.target_.depth != y.target_.depth) {
    throw std::invalid_argument("matrix difference: depth mismatch");
  }
  NumericOperator out = x;
  for (const auto& [pos, value] : y.entries_) out.add(pos.first, pos.second, -value);
  return out;
}

bool operator==(const NumericOperator& x, const NumericOperator& y) {
  return x.source_.depth == y.source_.depth && x.target_.depth == y.target_.depth &&
         x.entries_ == y.entries_;
}

std::string NumericOperator::to_dense_string() const {
  std::string out;
  for (Index r = 0; r < rows(); ++r) {
    for (Index c = 0; c < cols(); ++c) {
      if (c > 0) out += ' ';
      out += at(r, c).to_string();
    }
    out += '\n';
  }
  return out;
}

std::string NumericOperator::to_sparse_string() const {
  std::string out;
  for (const auto& [pos, value] : entries_) {
    out += "(" + std::to_string(pos.first) + ", " + std::to_string(pos.second) + ", " +
           value.to_string() + ")\n";
  }
  return out;
}

NumericOperator matrix_of(const AlgebraElement& x, unsigned source_depth) {
  if (source_depth < x.depth()) {
    throw DepthTooSmall("matrix_of: depth " + std::to_string(source_depth) +
                        " is below element depth " + std::to_string(x.depth()));
  }
  unsigned target_depth = source_depth;
  for (const auto& [key, coeff] : x.terms()) {
    target_depth = std::max(target_depth, source_depth + key.target.depth - key.source.depth);
  }
  NumericOperator out(source_depth, target_depth);
  for (const auto& [key, coeff] : x.terms()) {
    // V(I,J) e_{d,k} = e_{d',k'} exactly, where D(d',k') = phi^-1(D(d,k)):
    // the |phi'|^(1/2) factor and the basis normalisations cancel.
    const unsigned k = source_depth - key.source.depth;
    const unsigned image_depth = source_depth + key.target.depth - key.source.depth;
    NumericOperator block(source_depth, image_depth);
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << k); ++r) {
      const DyadicInterval cell{source_depth, (key.source.index << k) + r};
      const DyadicInterval image = transport(cell, key.source, key.target, key.orientation);
      block.add(image.index, cell.index, coeff);
    }
    const NumericOperator embedded = block.embed_target(target_depth);
    for (const auto& [pos, value] : embedded.entries()) out.add(pos.first, pos.second, value);
  }
  return out;
}

bool numeric_equals(const AlgebraElement& x, const AlgebraElement& y, unsigned depth) {
  const NumericOperator mx = matrix_of(x, depth);
  const NumericOperator my = matrix_of(y, depth);
  const unsigned target = std::max(mx.target().depth, my.target().depth);
  return mx.embed_target(target) == my.embed_target(target);
}

OdometerMatrix operator*(const OdometerMatrix& x, const OdometerMatrix& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("odometer product: size mismatch");
  OdometerMatrix out(x.n_);
  for (std::size_t i = 0; i < x.n_; ++i) {
    for (std::size_t k = 0; k < x.n_; ++k) {
      const int xv = x.at(i, k);
      if (xv == 0) continue;
      for (std::size_t j = 0; j < x.n_; ++j) out.at(i, j) += xv * y.at(k, j);
    }
  }
  return out;
}

OdometerMatrix operator+(const OdometerMatrix& x, const OdometerMatrix& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("odometer sum: size mismatch");
  OdometerMatrix out = x;
  for (std::size_t i = 0; i < out.cells_.size(); ++i) out.cells_[i] += y.cells_[i];
  return out;
}

OdometerMatrix odometer(std::span<const OdometerLetter> word, std::size_t n) {
  if (n < 2) throw std::invalid_argument("odometer: truncation must be at least 2");
  OdometerMatrix out(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t index = col;
    bool alive = true;
    for (auto letter = word.rbegin(); letter != word.rend() && alive; ++letter) {
      switch (*letter) {
        case OdometerLetter::T1:
          index = 2 * index;
          break;
        case OdometerLetter::T2:
          index = 2 * index + 1;
          break;
        case OdometerLetter::T1adj:
          alive = index % 2 == 0;
          index /= 2;
          break;
        case OdometerLetter::T2adj:
          alive = index % 2 == 1;
          index /= 2;
          break;
      }
      alive = alive && index < n;
    }
    if (alive) out.at(index, col) = 1;
  }
  return out;
}

DiagonalCommutant::DiagonalCommutant(unsigned depth) : depth_(depth) {
  if (depth < 1) throw std::invalid_argument("commutant test needs depth >= 1");
  for (unsigned k = 0; k <= depth; ++k) {
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << k); ++i) {
      for (std::uint64_t j = 0; j < (std::uint64_t{1} << k); ++j) {
        const AlgebraElement v(BasisIsometry{{k, i}, {k, j}, Orientation::plus});
        translations_.push_back(matrix_of(v, depth));
      }
    }
  }
}

bool DiagonalCommutant::commutes(std::span<const int> chi) const {
  if (chi.size() != (std::size_t{1} << depth_)) {
    throw std::invalid_argument("commutant test: vector length must be 2^depth");
  }
  // [diag(chi), M] = 0  <=>  chi[row] == chi[col] on every nonzero M(row, col).
  for (const auto& m : translations_) {
    for (const auto& [pos, value] : m.entries()) {
      if (chi[pos.first] != chi[pos.second]) return false;
    }
  }
  return true;
}

bool diagonal_commutant_test(std::span<const int> chi, unsigned depth) {
  return DiagonalCommutant(depth).commutes(chi);
}

std::vector<std::vector<int>> commuting_diagonal_projections(unsigned depth) {
  const DiagonalCommutant tester(depth);
  const std::size_t cells = std::size_t{1} << depth;
  std::vector<std::vector<int>> passing;
  std::vector<int> chi(cells);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    for (std::size_t c = 0; c < cells; ++c) chi[c] = static_cast<int>((mask >> c) & 1);
    if (tester.commutes(chi)) passing.push_back(chi);
  }
  return passing;
}

}  // namespace o2
