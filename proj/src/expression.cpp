#include "o2/expression.hpp"

#include <cctype>

#include "o2/errors.hpp"

namespace o2 {

namespace expr {

namespace {

ExpressionTree make(ExprNode node) { return std::make_shared<const ExprNode>(std::move(node)); }

ExpressionTree unary(ExprNode::Kind kind, ExpressionTree x) {
  return make(ExprNode{kind, {}, {}, 0, std::move(x), nullptr});
}

ExpressionTree binary(ExprNode::Kind kind, ExpressionTree x, ExpressionTree y) {
  return make(ExprNode{kind, {}, {}, 0, std::move(x), std::move(y)});
}

}  // namespace

ExpressionTree integer(long n) { return make(ExprNode{ExprNode::Kind::integer, n, {}, 0, {}, {}}); }
ExpressionTree sqrt2() { return make(ExprNode{ExprNode::Kind::sqrt2, {}, {}, 0, {}, {}}); }
ExpressionTree imag() { return make(ExprNode{ExprNode::Kind::imag, {}, {}, 0, {}, {}}); }

ExpressionTree symbol(std::string name) {
  return make(ExprNode{ExprNode::Kind::symbol, {}, std::move(name), 0, {}, {}});
}

ExpressionTree negate(ExpressionTree x) { return unary(ExprNode::Kind::negate, std::move(x)); }
ExpressionTree adjoint(ExpressionTree x) { return unary(ExprNode::Kind::adjoint, std::move(x)); }

ExpressionTree sum(ExpressionTree x, ExpressionTree y) {
  return binary(ExprNode::Kind::sum, std::move(x), std::move(y));
}

ExpressionTree difference(ExpressionTree x, ExpressionTree y) {
  return binary(ExprNode::Kind::difference, std::move(x), std::move(y));
}

ExpressionTree product(ExpressionTree x, ExpressionTree y) {
  return binary(ExprNode::Kind::product, std::move(x), std::move(y));
}

ExpressionTree quotient(ExpressionTree x, ExpressionTree y) {
  return binary(ExprNode::Kind::quotient, std::move(x), std::move(y));
}

}  // namespace expr

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::set<std::string, std::less<>>& symbols)
      : text_(text), symbols_(symbols) {}

  ExpressionTree parse() {
    ExpressionTree tree = expression();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return tree;
  }

 private:
  ExpressionTree expression() {
    ExpressionTree tree = term();
    for (;;) {
      skip_space();
      if (accept('+')) {
        tree = expr::sum(tree, term());
      } else if (accept('-')) {
        tree = expr::difference(tree, term());
      } else {
        return tree;
      }
    }
  }

  ExpressionTree term() {
    ExpressionTree tree = unary();
    for (;;) {
      skip_space();
      if (accept('*')) {
        tree = expr::product(tree, unary());
      } else if (accept('/')) {
        tree = expr::quotient(tree, unary());
      } else {
        return tree;
      }
    }
  }

  ExpressionTree unary() {
    skip_space();
    if (accept('-')) return expr::negate(unary());
    if (accept('+')) return unary();
    ExpressionTree tree = atom();
    for (;;) {
      skip_space();
      if (!accept('\'')) return tree;
      tree = expr::adjoint(tree);
    }
  }

  ExpressionTree atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      ExpressionTree inner = expression();
      skip_space();
      if (!accept(')')) {
        throw ParseError(pos_ < text_.size() ? "expected ')'" : "unexpected end of input", pos_);
      }
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return std::make_shared<const ExprNode>(
          ExprNode{ExprNode::Kind::integer, mpz_class(std::string(text_.substr(start, pos_ - start))),
                   {}, start, {}, {}});
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "r2") return expr::sqrt2();
      if (name == "i") return expr::imag();
      if (!symbols_.contains(name)) throw UnknownSymbol(std::string(name), start);
      return std::make_shared<const ExprNode>(
          ExprNode{ExprNode::Kind::symbol, {}, std::string(name), start, {}, {}});
    }
    throw ParseError("unexpected '" + std::string(1, ch) + "'", pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view text_;
  const std::set<std::string, std::less<>>& symbols_;
  std::size_t pos_ = 0;
};

}  // namespace

const std::set<std::string, std::less<>>& standard_symbols() {
  static const std::set<std::string, std::less<>> symbols{"S1", "S2", "W",  "U",  "T",
                                                          "V",  "B1", "B2", "I0", "Z0"};
  return symbols;
}

ExpressionTree parse_expression(std::string_view text) {
  return parse_expression(text, standard_symbols());
}

ExpressionTree parse_expression(std::string_view text,
                                const std::set<std::string, std::less<>>& symbols) {
  return Parser(text, symbols).parse();
}

std::string to_string(const ExpressionTree& tree) {
  using Kind = ExprNode::Kind;
  switch (tree->kind) {
    case Kind::integer:
      return tree->value.get_str();
    case Kind::sqrt2:
      return "r2";
    case Kind::imag:
      return "i";
    case Kind::symbol:
      return tree->symbol;
    case Kind::negate:
      return "(-" + to_string(tree->lhs) + ")";
    case Kind::adjoint:
      return "(" + to_string(tree->lhs) + ")'";
    case Kind::sum:
      return "(" + to_string(tree->lhs) + " + " + to_string(tree->rhs) + ")";
    case Kind::difference:
      return "(" + to_string(tree->lhs) + " - " + to_string(tree->rhs) + ")";
    case Kind::product:
      return "(" + to_string(tree->lhs) + " * " + to_string(tree->rhs) + ")";
    case Kind::quotient:
      return "(" + to_string(tree->lhs) + " / " + to_string(tree->rhs) + ")";
  }
  return {};
}

Bindings standard_bindings() {
  return {{"S1", gen::S1()}, {"S2", gen::S2()}, {"W", gen::W()},   {"U", gen::U()},
          {"T", gen::T()},   {"V", gen::Vgen()}, {"B1", gen::B1()}, {"B2", gen::B2()},
          {"I0", gen::one()}, {"Z0", gen::zero()}};
}

AlgebraElement substitute(const ExpressionTree& tree, const Bindings& bindings,
                          const Limits& limits) {
  using Kind = ExprNode::Kind;
  switch (tree->kind) {
    case Kind::integer:
      return AlgebraElement::scalar(Scalar(Rational(tree->value)));
    case Kind::sqrt2:
      return AlgebraElement::scalar(Scalar::sqrt2());
    case Kind::imag:
      return AlgebraElement::scalar(Scalar::imag());
    case Kind::symbol: {
      const auto it = bindings.find(tree->symbol);
      if (it == bindings.end()) throw UnknownSymbol(tree->symbol, tree->offset);
      return it->second;
    }
    case Kind::negate:
      return -substitute(tree->lhs, bindings, limits);
    case Kind::adjoint:
      return adjoint(substitute(tree->lhs, bindings, limits));
    case Kind::sum:
      return substitute(tree->lhs, bindings, limits) + substitute(tree->rhs, bindings, limits);
    case Kind::difference:
      return substitute(tree->lhs, bindings, limits) - substitute(tree->rhs, bindings, limits);
    case Kind::product:
      return mul(substitute(tree->lhs, bindings, limits), substitute(tree->rhs, bindings, limits),
                 limits);
    case Kind::quotient: {
      const AlgebraElement divisor = substitute(tree->rhs, bindings, limits);
      const auto c = divisor.as_scalar();
      if (!c) throw EvalError("divisor is not a scalar multiple of the identity");
      return inv(*c) * substitute(tree->lhs, bindings, limits);
    }
  }
  throw EvalError("malformed expression tree");
}

AlgebraElement eval(const ExpressionTree& tree, const Limits& limits) {
  return substitute(tree, standard_bindings(), limits);
}

}  // namespace o2
