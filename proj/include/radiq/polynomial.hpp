#pragma once

// Dense polynomials over Q: coefficient index i holds the coefficient of
// x^i, trailing zeros trimmed, the zero polynomial is the empty sequence.
// Includes denominator clearing, rational root enumeration (the rational
// root theorem), the depressed-cubic transform and the discriminant
// classification of real cubic roots.

#include "radiq/rational.hpp"

#include <initializer_list>
#include <set>
#include <string>
#include <vector>

namespace radiq {

class RationalPolynomial {
 public:
  RationalPolynomial() = default;  // zero polynomial
  explicit RationalPolynomial(std::vector<Rational> coefficients);
  RationalPolynomial(std::initializer_list<Rational> coefficients);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  Rational coefficient(std::size_t i) const {
    return i < coefficients_.size() ? coefficients_[i] : Rational(0);
  }
  Rational leading_coefficient() const;

  Rational evaluate(const Rational& x) const;
  RationalPolynomial derivative() const;

  friend RationalPolynomial operator+(const RationalPolynomial& x, const RationalPolynomial& y);
  friend RationalPolynomial operator-(const RationalPolynomial& x, const RationalPolynomial& y);
  friend RationalPolynomial operator*(const RationalPolynomial& x, const RationalPolynomial& y);
  RationalPolynomial operator-() const;
  friend RationalPolynomial operator*(const Rational& s, const RationalPolynomial& x);

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

 private:
  void trim();

  std::vector<Rational> coefficients_;
};

struct PolynomialDivision {
  RationalPolynomial quotient;
  RationalPolynomial remainder;
};

// Euclidean division over Q; divisor must be nonzero.
PolynomialDivision poly_divmod(const RationalPolynomial& dividend,
                               const RationalPolynomial& divisor);

// Monic gcd over Q (gcd of anything with 0 is the other operand, made monic).
RationalPolynomial poly_gcd(const RationalPolynomial& x, const RationalPolynomial& y);

// Multiplies by the lcm of coefficient denominators and divides out the
// content, yielding a primitive integer-coefficient polynomial with the
// same roots. The sign of the leading coefficient is preserved.
RationalPolynomial clear_denominators(const RationalPolynomial& h);

// The complete set of rational roots, via denominator clearing and the
// divisor grid of the rational root theorem; a zero constant term is
// handled by peeling x factors first.
std::set<Rational> rational_roots(const RationalPolynomial& h);

struct DepressedCubic {
  Rational P;
  Rational Q;
  Rational shift;  // the substitution offset a2/3

  friend bool operator==(const DepressedCubic&, const DepressedCubic&) = default;
};

// y^3 + a2 y^2 + a1 y + a0 under y = x - a2/3 becomes x^3 + Px + Q; roots
// of the depressed form are the original roots plus a2/3.
DepressedCubic depress_cubic(const Rational& a2, const Rational& a1, const Rational& a0);

// Delta = (27 Q^2 + 4 P^3) / (3 P^2); requires P != 0.
Rational cubic_delta(const Rational& P, const Rational& Q);

enum class RootClass { three_distinct_real, one_real, multiple_root };

// Real-root structure of x^3 + Px + Q: three distinct reals iff Delta < 0,
// a multiple root iff Delta = 0, otherwise one real root. P = 0 is handled
// directly (x^3 = -Q).
RootClass classify_real_roots(const Rational& P, const Rational& Q);

// "x^3 + 3*x + 14"; fractional coefficients are parenthesized.
std::string to_string(const RationalPolynomial& h);

}  // namespace radiq
