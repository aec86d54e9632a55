#include "radiq/surd.hpp"

#include <cassert>
#include <stdexcept>

namespace radiq {

SurdElement normalize_surd(const Rational& a, const Rational& b, const Rational& p_raw) {
  if (p_raw.sign() <= 0) throw std::domain_error("p must be positive");
  if (rational_square_root(p_raw)) {
    throw std::domain_error("p is a perfect square; the element is rational");
  }
  // sqrt(u/v) = sqrt(u*v)/v; pull the square part of u*v into b.
  const Integer u = p_raw.numerator();
  const Integer v = p_raw.denominator();
  const SquarefreeSplit split = squarefree_split(u * v);
  assert(split.squarefree_part > 1);
  return SurdElement{a, b * Rational(split.square_root_part, v), split.squarefree_part};
}

std::pair<Rational, Rational> cube_surd(const Rational& A, const Rational& B, const Integer& p) {
  const Rational A2 = A * A;
  const Rational B2p = B * B * Rational(p);
  return {A * (A2 + 3 * B2p), B * (3 * A2 + B2p)};
}

Rational norm_surd(const SurdElement& e) {
  return e.a * e.a - e.b * e.b * Rational(e.p);
}

SurdElement conjugate(const SurdElement& e) { return {e.a, -e.b, e.p}; }

static void require_same_field(const SurdElement& x, const SurdElement& y) {
  if (x.p != y.p) throw std::invalid_argument("surd arithmetic across distinct fields");
}

SurdElement operator+(const SurdElement& x, const SurdElement& y) {
  require_same_field(x, y);
  return {x.a + y.a, x.b + y.b, x.p};
}

SurdElement operator-(const SurdElement& x, const SurdElement& y) {
  require_same_field(x, y);
  return {x.a - y.a, x.b - y.b, x.p};
}

SurdElement operator*(const SurdElement& x, const SurdElement& y) {
  require_same_field(x, y);
  return {x.a * y.a + x.b * y.b * Rational(x.p), x.a * y.b + x.b * y.a, x.p};
}

static std::string coefficient_string(const Rational& c) {
  const std::string s = c.to_string();
  return c.is_integer() ? s : "(" + s + ")";
}

std::string to_string(const SurdElement& e) {
  const std::string radical = "sqrt(" + to_string(e.p) + ")";
  if (e.b.is_zero()) return e.a.to_string();
  const Rational b_abs = abs(e.b);
  std::string surd_part = b_abs == 1 ? radical : coefficient_string(b_abs) + "*" + radical;
  if (e.a.is_zero()) return (e.b.sign() < 0 ? "-" : "") + surd_part;
  return e.a.to_string() + (e.b.sign() < 0 ? " - " : " + ") + surd_part;
}

}  // namespace radiq
