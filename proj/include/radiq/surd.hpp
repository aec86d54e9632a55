#pragma once

// Elements a + b*sqrt(p) of the real quadratic field Q(sqrt(p)). The
// canonical representative keeps p a squarefree integer > 1, so equality
// is componentwise.

#include "radiq/rational.hpp"

#include <string>
#include <utility>

namespace radiq {

struct SurdElement {
  Rational a;  // rational part
  Rational b;  // coefficient of sqrt(p)
  Integer p;   // squarefree, > 1

  friend bool operator==(const SurdElement&, const SurdElement&) = default;
};

// Maps (a, b, p_raw) with rational p_raw > 0, p_raw not a rational square,
// onto the canonical representative: p becomes the squarefree integer part
// of p_raw and b is rescaled so b'*sqrt(p) == b*sqrt(p_raw) exactly.
SurdElement normalize_surd(const Rational& a, const Rational& b, const Rational& p_raw);

// (A + B*sqrt(p))^3 = a + b*sqrt(p) with a = A(A^2 + 3B^2 p),
// b = B(3A^2 + B^2 p).
std::pair<Rational, Rational> cube_surd(const Rational& A, const Rational& B, const Integer& p);

// N = a^2 - b^2 p, the product of e with its conjugate.
Rational norm_surd(const SurdElement& e);

SurdElement conjugate(const SurdElement& e);

// Ring arithmetic within a single Q(sqrt(p)); mixing distinct p throws.
SurdElement operator+(const SurdElement& x, const SurdElement& y);
SurdElement operator-(const SurdElement& x, const SurdElement& y);
SurdElement operator*(const SurdElement& x, const SurdElement& y);

// "1 + sqrt(2)", "7 - 5*sqrt(2)", "(1/2)*sqrt(3)"; the sign of b is folded
// into the joining operator.
std::string to_string(const SurdElement& e);

}  // namespace radiq
