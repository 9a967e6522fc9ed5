#include "o2/pisometry.hpp"

#include <tuple>

#include "o2/errors.hpp"

namespace o2 {

std::string BasisIsometry::to_string() const {
  return std::string("V") + orientation_char(orientation) + "(" + target.to_string() + "," +
         source.to_string() + ")";
}

BasisIsometry BasisIsometry::parse(std::string_view text) {
  if (text.size() < 4 || text[0] != 'V' || (text[1] != '+' && text[1] != '-') || text[2] != '(' ||
      text.back() != ')') {
    throw ParseError("malformed basis key '" + std::string(text) + "'", 0);
  }
  const std::string_view inner = text.substr(3, text.size() - 4);
  const std::size_t comma = inner.find("),");
  if (comma == std::string_view::npos) {
    throw ParseError("malformed basis key '" + std::string(text) + "'", 0);
  }
  return {DyadicInterval::parse(inner.substr(0, comma + 1)),
          DyadicInterval::parse(inner.substr(comma + 2)),
          text[1] == '+' ? Orientation::plus : Orientation::minus};
}

bool operator<(const BasisIsometry& x, const BasisIsometry& y) {
  // plus sorts before minus
  const int ex = -static_cast<int>(x.orientation);
  const int ey = -static_cast<int>(y.orientation);
  return std::tie(ex, x.target, x.source) < std::tie(ey, y.target, y.source);
}

std::optional<BasisIsometry> compose(const BasisIsometry& x, const BasisIsometry& y) {
  // V(I,J) V(K,L) = V(phi_x^-1(J n K), phi_y(J n K))
  const auto middle = intersect(x.source, y.target);
  if (!middle) return std::nullopt;
  return BasisIsometry{transport(*middle, x.source, x.target, x.orientation),
                       transport(*middle, y.target, y.source, y.orientation),
                       x.orientation * y.orientation};
}

BasisIsometry adjoint(const BasisIsometry& x) { return {x.source, x.target, x.orientation}; }

std::pair<BasisIsometry, BasisIsometry> split(const BasisIsometry& x, unsigned max_depth) {
  if (x.depth() + 1 > max_depth) {
    throw ResourceError("splitting " + x.to_string() + " exceeds depth ceiling " +
                        std::to_string(max_depth));
  }
  if (x.orientation == Orientation::plus) {
    return {{x.target.left_child(), x.source.left_child(), x.orientation},
            {x.target.right_child(), x.source.right_child(), x.orientation}};
  }
  return {{x.target.left_child(), x.source.right_child(), x.orientation},
          {x.target.right_child(), x.source.left_child(), x.orientation}};
}

std::optional<BasisIsometry> parent(const BasisIsometry& x) {
  if (x.target.depth == 0 || x.source.depth == 0) return std::nullopt;
  const bool same_side = x.target.is_left_child() == x.source.is_left_child();
  if (same_side != (x.orientation == Orientation::plus)) return std::nullopt;
  return BasisIsometry{x.target.parent(), x.source.parent(), x.orientation};
}

BasisIsometry sibling(const BasisIsometry& x) {
  const auto [first, second] = split(*parent(x));
  return first == x ? second : first;
}

BasisIsometry projection(const DyadicInterval& x) { return {x, x, Orientation::plus}; }

}  // namespace o2
