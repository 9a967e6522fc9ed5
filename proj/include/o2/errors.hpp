#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace o2 {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Raised when an interval image or preimage leaves [-1,1] or is not a
/// standard dyadic interval. Indicates a composition bug, never bad input.
class DyadicError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The configured depth ceiling was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownSymbol : public ParseError {
 public:
  UnknownSymbol(const std::string& symbol, std::size_t offset)
      : ParseError("unknown symbol '" + symbol + "'", offset), symbol_(symbol) {}

  const std::string& symbol() const noexcept { return symbol_; }

 private:
  std::string symbol_;
};

/// Evaluation failed for a reason other than syntax (for instance a
/// division by an operator that is not a scalar multiple of the identity).
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RelationViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DepthTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BoundaryViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace o2
