#pragma once

// Surface syntax for radical expressions:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | 'sqrt' '(' expr ')' | 'cbrt' '(' expr ')'
//           | '(' expr ')' | '-' factor
//   rational := integer ('/' integer)?
// Whitespace insensitive. Parse errors carry the byte offset.

#include "radiq/rational.hpp"
#include "radiq/surd.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace radiq {

struct RadicalExpr;
using ExprPtr = std::unique_ptr<RadicalExpr>;

struct RadicalExpr {
  enum class Kind { rational_literal, negate, add, subtract, multiply, sqrt_of, cbrt_of };

  Kind kind;
  Rational value;  // rational_literal only
  ExprPtr lhs;     // unary operand / left child
  ExprPtr rhs;     // right child of binary nodes
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::string message)
      : std::runtime_error(message + " at offset " + std::to_string(offset)),
        offset_(offset),
        message_(std::move(message)) {}

  std::size_t offset() const { return offset_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t offset_;
  std::string message_;
};

class UnsupportedShape : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ExprPtr parse_expression(std::string_view text);

// Canonical text form; parsing it back yields an equal tree.
std::string render(const RadicalExpr& e);

bool equal_trees(const RadicalExpr& x, const RadicalExpr& y);

// A cbrt body folded to a + b*sqrt(radicand). has_sqrt is false for pure
// rational bodies (no sqrt anywhere), in which case radicand is 0.
struct CbrtBody {
  Rational a;
  Rational b;
  Rational radicand;
  bool has_sqrt = false;
};

// Requires e to be cbrt(...) whose body is an affine combination of
// rationals and at most one sqrt; throws UnsupportedShape otherwise.
CbrtBody analyze_cbrt(const RadicalExpr& e);

// analyze_cbrt followed by normalize_surd; the body must contain a sqrt.
SurdElement normalize_to_surd(const RadicalExpr& e);

}  // namespace radiq
