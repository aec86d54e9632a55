#include "radiq/sextic.hpp"

#include "radiq/cubic.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace radiq {

RationalPolynomial sextic_polynomial(const Rational& c, const Rational& d) {
  return {d, 0, 0, c, 0, 0, 1};
}

namespace {

void sort_factors(std::vector<RationalPolynomial>& factors) {
  std::sort(factors.begin(), factors.end(),
            [](const RationalPolynomial& x, const RationalPolynomial& y) {
              if (x.degree() != y.degree()) return x.degree() < y.degree();
              return std::lexicographical_compare(
                  x.coefficients().begin(), x.coefficients().end(),
                  y.coefficients().begin(), y.coefficients().end());
            });
}

int root_multiplicity(const RationalPolynomial& h, const Rational& r) {
  const RationalPolynomial linear{-r, 1};
  RationalPolynomial w = h;
  int multiplicity = 0;
  while (w.degree() >= 1) {
    auto [quotient, remainder] = poly_divmod(w, linear);
    if (!remainder.is_zero()) break;
    ++multiplicity;
    w = std::move(quotient);
  }
  return multiplicity;
}

}  // namespace

SexticFactorization classify_sextic(const Rational& c, const Rational& d) {
  if (d.is_zero()) throw std::domain_error("degenerate: factor x^3 first");

  SexticFactorization out;
  out.c = c;
  out.d = d;
  out.evidence.delta = c * c - 4 * d;
  out.evidence.resolvent = resolvent_of_sextic(c, d);

  const auto sqrt_delta = rational_square_root(out.evidence.delta);
  if (sqrt_delta) {
    out.evidence.sqrt_delta = *sqrt_delta;
    // alpha carries the +sqrt(Delta) branch.
    const Rational alpha_cubed = (-c + *sqrt_delta) / 2;
    const Rational beta_cubed = (-c - *sqrt_delta) / 2;
    const auto alpha = rational_cube_root(alpha_cubed);
    const auto beta = rational_cube_root(beta_cubed);
    if (alpha && beta) {
      out.row = 4;
      out.factors = {RationalPolynomial{-*alpha, 1},
                     RationalPolynomial{-*beta, 1},
                     RationalPolynomial{*alpha * *alpha, *alpha, 1},
                     RationalPolynomial{*beta * *beta, *beta, 1}};
    } else if (alpha || beta) {
      out.row = 3;
      const Rational t = alpha ? *alpha : *beta;           // the rational cube root
      const Rational other_cubed = alpha ? beta_cubed : alpha_cubed;
      out.factors = {RationalPolynomial{-t, 1},
                     RationalPolynomial{t * t, t, 1},
                     RationalPolynomial{-other_cubed, 0, 0, 1}};
    } else {
      out.row = 2;
      out.factors = {RationalPolynomial{-alpha_cubed, 0, 0, 1},
                     RationalPolynomial{-beta_cubed, 0, 0, 1}};
    }
    sort_factors(out.factors);
    return out;
  }

  const auto cbrt_d = rational_cube_root(d);
  if (cbrt_d) out.evidence.cbrt_d = *cbrt_d;
  if (!cbrt_d) {
    out.row = 1;
    out.factors = {sextic_polynomial(c, d)};
    return out;
  }

  out.evidence.resolvent_roots = rational_roots(out.evidence.resolvent);
  const auto& roots = out.evidence.resolvent_roots;
  const Rational t = *cbrt_d;  // alpha*beta

  if (roots.empty()) {
    out.row = 1;
    out.factors = {sextic_polynomial(c, d)};
    return out;
  }

  if (roots.size() == 1) {
    out.row = 5;
    const Rational r = *roots.begin();
    const Rational sigma = r / t;  // alpha + beta
    out.factors = {RationalPolynomial{t, -sigma, 1},
                   RationalPolynomial{t * t, r, sigma * sigma - t, sigma, 1}};
    sort_factors(out.factors);
    return out;
  }

  // Completely reducible resolvent: one quadratic x^2 - (r_j/t) x + t per
  // root, repeated with the root's multiplicity.
  out.row = 6;
  int total = 0;
  for (const Rational& r : roots) {
    const int multiplicity = root_multiplicity(out.evidence.resolvent, r);
    total += multiplicity;
    for (int i = 0; i < multiplicity; ++i) {
      out.factors.push_back(RationalPolynomial{t, -(r / t), 1});
    }
  }
  if (total != 3) throw std::logic_error("internal error: resolvent multiplicities do not sum to 3");
  sort_factors(out.factors);
  return out;
}

RationalPolynomial expand_factors(const SexticFactorization& f) {
  RationalPolynomial product{1};
  for (const RationalPolynomial& factor : f.factors) product = product * factor;
  return product;
}

std::string to_string(const SexticFactorization& f) {
  const std::string g = to_string(sextic_polynomial(f.c, f.d));
  if (f.row == 1) return g + " is irreducible";
  std::string out = g + " = ";
  for (const RationalPolynomial& factor : f.factors) out += "(" + to_string(factor) + ")";
  return out;
}

}  // namespace radiq
