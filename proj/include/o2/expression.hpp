#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "o2/algebra.hpp"

namespace o2 {

struct ExprNode;
using ExpressionTree = std::shared_ptr<const ExprNode>;

/// Syntax tree for operator expressions over named generators.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | factor
///   factor  := atom '\''*
///   atom    := generator | integer | 'r2' | 'i' | '(' expr ')'
///
/// The postfix apostrophe is the adjoint. A divisor must evaluate to a
/// nonzero scalar multiple of the identity.
struct ExprNode {
  enum class Kind { integer, sqrt2, imag, symbol, negate, sum, difference, product, quotient, adjoint };

  Kind kind;
  mpz_class value;       // integer
  std::string symbol;    // symbol
  std::size_t offset = 0;
  ExpressionTree lhs;    // unary operand or left operand
  ExpressionTree rhs;
};

namespace expr {

ExpressionTree integer(long n);
ExpressionTree sqrt2();
ExpressionTree imag();
ExpressionTree symbol(std::string name);
ExpressionTree negate(ExpressionTree x);
ExpressionTree adjoint(ExpressionTree x);
ExpressionTree sum(ExpressionTree x, ExpressionTree y);
ExpressionTree difference(ExpressionTree x, ExpressionTree y);
ExpressionTree product(ExpressionTree x, ExpressionTree y);
ExpressionTree quotient(ExpressionTree x, ExpressionTree y);

}  // namespace expr

/// S1 S2 W U T V B1 B2 I0 Z0.
const std::set<std::string, std::less<>>& standard_symbols();

/// Throws ParseError (with offset) on syntax errors and UnknownSymbol for
/// identifiers outside `symbols`.
ExpressionTree parse_expression(std::string_view text);
ExpressionTree parse_expression(std::string_view text,
                                const std::set<std::string, std::less<>>& symbols);

/// Fully parenthesised text that parses back to an equal tree.
std::string to_string(const ExpressionTree& tree);

using Bindings = std::map<std::string, AlgebraElement, std::less<>>;

/// The standard generators, I0 = 1 and Z0 = 0.
Bindings standard_bindings();

/// Evaluate with each symbol replaced by its binding. Throws UnknownSymbol
/// for unmapped symbols, EvalError or DivisionByZero for bad divisors and
/// ResourceError past the depth ceiling.
AlgebraElement substitute(const ExpressionTree& tree, const Bindings& bindings,
                          const Limits& limits = {});

AlgebraElement eval(const ExpressionTree& tree, const Limits& limits = {});

}  // namespace o2
