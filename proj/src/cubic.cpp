#include "radiq/cubic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace radiq {

std::pair<Rational, Rational> sextic_for_depressed(const Rational& P, const Rational& Q) {
  if (P.is_zero()) throw std::domain_error("use direct cube root for P=0");
  return {-3 * Q / P, -P / 3};
}

RationalPolynomial resolvent_of_sextic(const Rational& c, const Rational& d) {
  return {c * d, -3 * d, 0, 1};
}

std::array<BigComplex, 3> recombine_resolvent_roots(const BigComplex& alpha,
                                                    const BigComplex& beta) {
  const mpfr_prec_t prec = std::max(
      std::max(alpha.re.precision(), alpha.im.precision()),
      std::max(beta.re.precision(), beta.im.precision()));
  // zeta3 = (-1 + i sqrt(3)) / 2; zeta3^2 is its exact conjugate.
  const BigFloat minus_half = BigFloat::from_double(-0.5, prec);
  const BigFloat root3_half = sqrt(BigFloat::from_rational(3, prec)).scaled_by_power_of_two(-1);
  const BigComplex zeta{minus_half, root3_half};
  const BigComplex zeta_sq = conj(zeta);
  const BigComplex ab = alpha * beta;
  return {ab * (alpha + beta),
          ab * (alpha * zeta + beta * zeta_sq),
          ab * (alpha * zeta_sq + beta * zeta)};
}

namespace {

struct RootMultiplicity {
  Rational root;
  int multiplicity;
};

// Distinct rational roots, ascending, with multiplicities read off
// gcd(h, h'): the multiplicity in h is one more than in the gcd.
std::vector<RootMultiplicity> exact_roots_with_multiplicity(const RationalPolynomial& h) {
  std::vector<RootMultiplicity> out;
  const std::set<Rational> distinct = rational_roots(h);
  if (distinct.empty()) return out;
  const RationalPolynomial g = poly_gcd(h, h.derivative());
  for (const Rational& r : distinct) {
    const RationalPolynomial linear{-r, 1};
    int multiplicity = 1;
    RationalPolynomial w = g;
    while (w.degree() >= 1) {
      auto [quotient, remainder] = poly_divmod(w, linear);
      if (!remainder.is_zero()) break;
      ++multiplicity;
      w = std::move(quotient);
    }
    out.push_back({r, multiplicity});
  }
  return out;
}

// Three roots of the depressed cubic x^3 + Px + Q, all irrational
// (callers have already peeled every rational root).
std::array<BigComplex, 3> depressed_roots_numeric(const Rational& P, const Rational& Q,
                                                  mpfr_prec_t work) {
  const BigFloat zero(work);
  if (P.is_zero()) {
    // x^3 = -Q; the real cube root plus a conjugate pair at angle 2pi/3.
    const BigFloat t = cbrt(BigFloat::from_rational(-Q, work));
    const BigFloat minus_half_t = (-t).scaled_by_power_of_two(-1);
    const BigFloat im = abs(t).scaled_by_power_of_two(-1) * sqrt(BigFloat::from_rational(3, work));
    return {BigComplex{t, zero}, BigComplex{minus_half_t, im}, BigComplex{minus_half_t, -im}};
  }
  const auto [c, d] = sextic_for_depressed(P, Q);
  const Rational delta = c * c - 4 * d;  // the same value as (27Q^2+4P^3)/(3P^2)
  BigComplex alpha(work), beta(work);
  if (delta.sign() > 0) {
    // alpha^3, beta^3 = (-c +- sqrt(delta))/2 are real; compute the branch
    // free of cancellation and recover the other from alpha^3 beta^3 = d.
    const BigFloat sq = sqrt(BigFloat::from_rational(delta, work));
    const BigFloat c_f = BigFloat::from_rational(c, work);
    const BigFloat d_f = BigFloat::from_rational(d, work);
    BigFloat alpha_cubed(work), beta_cubed(work);
    if (c.sign() <= 0) {
      alpha_cubed = (-c_f + sq).scaled_by_power_of_two(-1);
      beta_cubed = d_f / alpha_cubed;
    } else {
      beta_cubed = (-c_f - sq).scaled_by_power_of_two(-1);
      alpha_cubed = d_f / beta_cubed;
    }
    alpha = BigComplex{cbrt(alpha_cubed), zero};
    beta = BigComplex{cbrt(beta_cubed), zero};
  } else if (delta.sign() < 0) {
    // Conjugate radicals; beta = conj(alpha) keeps alpha*beta exactly real.
    const BigFloat sq = sqrt(BigFloat::from_rational(-delta, work));
    alpha = complex_cbrt(BigComplex{BigFloat::from_rational(-c / 2, work),
                                    sq.scaled_by_power_of_two(-1)});
    beta = conj(alpha);
  } else {
    // delta = 0 forces a rational multiple root, peeled before we get here.
    throw std::logic_error("internal error: vanishing delta on the numeric path");
  }
  return recombine_resolvent_roots(alpha, beta);
}

}  // namespace

CubicRoots solve_cubic(const Rational& a3, const Rational& a2, const Rational& a1,
                       const Rational& a0, long precision_bits) {
  if (a3.is_zero()) throw std::invalid_argument("not a cubic");
  if (precision_bits < 64) throw std::invalid_argument("precision_bits must be >= 64");

  const Rational b2 = a2 / a3;
  const Rational b1 = a1 / a3;
  const Rational b0 = a0 / a3;
  const RationalPolynomial monic{b0, b1, b2, 1};

  CubicRoots result;
  result.precision_bits = precision_bits;
  const long bound_exponent = -(precision_bits / 2);
  result.residual_bound = BigFloat::power_of_two(bound_exponent, 64);

  RationalPolynomial remaining = monic;
  for (const auto& [root, multiplicity] : exact_roots_with_multiplicity(monic)) {
    const RationalPolynomial linear{-root, 1};
    for (int i = 0; i < multiplicity; ++i) {
      result.exact_roots.push_back(root);
      auto [quotient, remainder] = poly_divmod(remaining, linear);
      if (!remainder.is_zero()) throw std::logic_error("internal error: inexact deflation");
      remaining = std::move(quotient);
    }
  }
  const int exact_count = static_cast<int>(result.exact_roots.size());
  if (exact_count == 3) return result;
  if (exact_count == 2) throw std::logic_error("internal error: two rational roots of a cubic");

  for (int attempt = 0; attempt < 4; ++attempt) {
    const mpfr_prec_t work = static_cast<mpfr_prec_t>((precision_bits + 64) << attempt);
    std::vector<CubicRoots::Numeric> numeric;

    if (exact_count == 1) {
      // remaining = x^2 + ux + v with no rational root.
      const Rational u = remaining.coefficient(1);
      const Rational v = remaining.coefficient(0);
      const Rational disc = u * u - 4 * v;
      if (disc.is_zero()) {
        // a rational double root, which the exact pass cannot have missed
        throw std::logic_error("internal error: rational double root on the numeric path");
      }
      const BigFloat center = BigFloat::from_rational(-u / 2, work);
      if (disc.sign() > 0) {
        const BigFloat s = sqrt(BigFloat::from_rational(disc, work)).scaled_by_power_of_two(-1);
        const BigFloat zero(work);
        numeric.push_back({center - s, zero});
        numeric.push_back({center + s, zero});
      } else {
        const BigFloat s = sqrt(BigFloat::from_rational(-disc, work)).scaled_by_power_of_two(-1);
        numeric.push_back({center, s});
        numeric.push_back({center, -s});
      }
    } else {
      const DepressedCubic dep = depress_cubic(b2, b1, b0);
      const std::array<BigComplex, 3> depressed = depressed_roots_numeric(dep.P, dep.Q, work);
      const BigFloat shift_f = BigFloat::from_rational(dep.shift, work);
      for (const BigComplex& z : depressed) numeric.push_back({z.re - shift_f, z.im});
    }

    // Residual verification against the original cubic.
    const BigFloat bound = BigFloat::power_of_two(bound_exponent, work);
    const BigFloat bound_sq = bound * bound;
    const std::array<Rational, 4> coeff{a0, a1, a2, a3};
    bool verified = true;
    for (const CubicRoots::Numeric& root : numeric) {
      const BigComplex z{root.re, root.im};
      BigComplex acc(work);
      for (int i = 3; i >= 0; --i) {
        acc = acc * z + BigComplex{BigFloat::from_rational(coeff[i], work), BigFloat(work)};
      }
      if (!(modulus_squared(acc) <= bound_sq)) {
        verified = false;
        break;
      }
    }
    if (!verified) continue;

    std::sort(numeric.begin(), numeric.end(),
              [](const CubicRoots::Numeric& x, const CubicRoots::Numeric& y) {
                if (x.re != y.re) return x.re < y.re;
                return x.im < y.im;
              });
    result.numeric_roots = std::move(numeric);
    return result;
  }
  throw std::logic_error("residual verification failed at every working precision");
}

}  // namespace radiq
