#pragma once

// Decides whether cbrt(a + b*sqrt(p)) collapses to A + B*sqrt(p) over Q,
// and if so produces A and B exactly together with the certificate data
// (the norm N, its rational cube root, the resolvent root r, and the
// minimal polynomial of the radical). Every positive answer is re-verified
// by cubing before it is returned.

#include "radiq/polynomial.hpp"
#include "radiq/surd.hpp"

#include <string>
#include <variant>

namespace radiq {

struct Denested {
  Rational A;
  Rational B;
  Integer p;
  Rational N;
  Rational cube_root_N;
  Rational r;                    // the unique rational root of the resolvent
  RationalPolynomial min_poly;   // x^2 - (r/cbrt(N)) x + cbrt(N)
};

struct NotACube {
  Rational N;
};

struct ResolventIrreducible {
  Rational N;
  Rational cube_root_N;
  RationalPolynomial resolvent;
};

using DenestVerdict = std::variant<Denested, NotACube, ResolventIrreducible>;

// R(x) = x^3 - 3N x - 2aN.
RationalPolynomial build_resolvent(const Rational& a, const Rational& N);

// The decision procedure. Requires b != 0 (b < 0 is folded through
// conjugation) and p_raw > 0 not a rational square.
DenestVerdict denest(const Rational& a, const Rational& b, const Rational& p_raw);

DenestVerdict denest_expression(const SurdElement& e);

// The four exact identities behind a Denested verdict for (a, b, p):
// r^3 - 3Nr - 2aN = 0; r^6 - 6Nr^4 + 9N^2 r^2 - 4N^2 a^2 = 0; r^2 - N > 0;
// and the cubing round trip (A + B sqrt(p))^3 = a + b sqrt(p).
bool certificate_identities(const Denested& verdict, const Rational& a, const Rational& b,
                            const Integer& p);

std::string to_string(const DenestVerdict& verdict);

}  // namespace radiq
