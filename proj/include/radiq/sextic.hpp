#pragma once

// Complete prime factorization of g(x) = x^6 + c x^3 + d over Q. Writing
// alpha^3, beta^3 = (-c +- sqrt(Delta))/2 with Delta = c^2 - 4d, exactly
// one of six shapes applies:
//
//   row 1  g irreducible         sqrt(Delta) irrational, and cbrt(d)
//                                irrational or R without rational roots
//   row 2  (x^3-a^3)(x^3-b^3)    sqrt(Delta) rational, neither root a cube
//   row 3  (x-a)(x^2+ax+a^2)(x^3-b^3)   one of the two roots a cube
//   row 4  (x-a)(x-b)(x^2+ax+a^2)(x^2+bx+b^2)   both cubes
//   row 5  quadratic * quartic   sqrt(Delta) irrational, cbrt(d) rational,
//                                R with a unique rational root
//   row 6  three quadratics      as row 5 but R completely reducible
//
// where R(x) = x^3 - 3d x + cd is the attached resolvent cubic.

#include "radiq/polynomial.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace radiq {

struct SexticEvidence {
  Rational delta;                       // c^2 - 4d
  std::optional<Rational> sqrt_delta;
  std::optional<Rational> cbrt_d;       // consulted only when sqrt_delta is absent
  RationalPolynomial resolvent;         // x^3 - 3d x + cd
  std::set<Rational> resolvent_roots;   // populated when the branch consulted R
};

struct SexticFactorization {
  int row = 0;  // 1..6, the shape that matched (see above)
  Rational c;
  Rational d;
  std::vector<RationalPolynomial> factors;  // monic primes, ascending degree then lex
  SexticEvidence evidence;
};

// x^6 + c x^3 + d as a polynomial value.
RationalPolynomial sextic_polynomial(const Rational& c, const Rational& d);

// Requires d != 0 (d = 0 reduces to x^3 (x^3 + c) outside the table).
SexticFactorization classify_sextic(const Rational& c, const Rational& d);

// Exact product of all factors; equals x^6 + c x^3 + d.
RationalPolynomial expand_factors(const SexticFactorization& f);

// "x^6 - 14*x^3 - 1 = (x^2 - 2*x - 1)(x^4 + 2*x^3 + 5*x^2 - 2*x + 1)",
// or "... is irreducible" for row 1.
std::string to_string(const SexticFactorization& f);

}  // namespace radiq
