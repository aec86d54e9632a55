#pragma once

// Cubic root solver via the resolvent route: depress the cubic, attach the
// symmetric sextic trinomial, and recombine its radical roots into the
// cubic's roots. Rational roots come out exactly; the rest are certified
// numerics whose residuals are verified by back-substitution.

#include "radiq/bigfloat.hpp"
#include "radiq/polynomial.hpp"

#include <array>
#include <utility>
#include <vector>

namespace radiq {

struct CubicRoots {
  struct Numeric {
    BigFloat re;
    BigFloat im;
  };

  std::vector<Rational> exact_roots;      // ascending, repeated per multiplicity
  std::vector<Numeric> numeric_roots;     // ascending by (re, im)
  long precision_bits = 0;
  BigFloat residual_bound;                // 2^-(precision_bits/2)
};

// The symmetric sextic x^6 + c x^3 + d attached to x^3 + Px + Q:
// c = -3Q/P, d = -P/3. Requires P != 0.
std::pair<Rational, Rational> sextic_for_depressed(const Rational& P, const Rational& Q);

// The depressed cubic R(x) = x^3 - 3d x + cd whose roots are the
// recombinations of the sextic's radical roots.
RationalPolynomial resolvent_of_sextic(const Rational& c, const Rational& d);

// alpha*beta*(alpha*zeta3^i + beta*zeta3^-i) for i = 0, 1, 2. Callers pick
// alpha and beta so that alpha*beta is real; exactly-conjugate inputs then
// produce exactly-real outputs.
std::array<BigComplex, 3> recombine_resolvent_roots(const BigComplex& alpha,
                                                    const BigComplex& beta);

// Solves a3 x^3 + a2 x^2 + a1 x + a0 = 0. Rational roots are returned
// exactly (multiplicity from gcd(h, h')); the remainder are numerics at the
// requested precision with |h(x)| <= 2^-(precision_bits/2) verified.
// Requires a3 != 0 and precision_bits >= 64.
CubicRoots solve_cubic(const Rational& a3, const Rational& a2, const Rational& a1,
                       const Rational& a0, long precision_bits);

}  // namespace radiq
