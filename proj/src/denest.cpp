#include "radiq/denest.hpp"

#include <set>
#include <stdexcept>
#include <utility>

namespace radiq {

RationalPolynomial build_resolvent(const Rational& a, const Rational& N) {
  return {-2 * a * N, -3 * N, 0, 1};
}

DenestVerdict denest(const Rational& a, const Rational& b, const Rational& p_raw) {
  if (b.is_zero()) throw std::invalid_argument("not a nested radical");
  if (b.sign() < 0) {
    // cbrt(a - b sqrt(p)) is the conjugate of cbrt(a + b sqrt(p)).
    DenestVerdict verdict = denest(a, -b, p_raw);
    if (auto* d = std::get_if<Denested>(&verdict)) d->B = -d->B;
    return verdict;
  }

  const SurdElement e = normalize_surd(a, b, p_raw);
  const Rational N = norm_surd(e);
  if (N.is_zero()) throw std::logic_error("internal error: zero norm for an irrational surd");

  const auto cube_root_N = rational_cube_root(N);
  if (!cube_root_N) return NotACube{N};

  const RationalPolynomial resolvent = build_resolvent(e.a, N);
  const std::set<Rational> roots = rational_roots(resolvent);
  if (roots.empty()) return ResolventIrreducible{N, *cube_root_N, resolvent};
  if (roots.size() > 1) {
    throw std::logic_error("internal certificate check failed: several rational resolvent roots");
  }

  const Rational r = *roots.begin();
  const Rational r2_minus_N = r * r - N;
  if (r2_minus_N.sign() <= 0) {
    throw std::logic_error("internal certificate check failed: r^2 - N not positive");
  }
  const Rational A = r / (2 * *cube_root_N);
  const Rational B = e.b * (*cube_root_N * *cube_root_N) / r2_minus_N;
  RationalPolynomial min_poly{*cube_root_N, -(r / *cube_root_N), 1};

  if (cube_surd(A, B, e.p) != std::pair(e.a, e.b)) {
    throw std::logic_error("internal certificate check failed");
  }
  return Denested{A, B, e.p, N, *cube_root_N, r, std::move(min_poly)};
}

DenestVerdict denest_expression(const SurdElement& e) {
  return denest(e.a, e.b, Rational(e.p));
}

bool certificate_identities(const Denested& verdict, const Rational& a, const Rational& b,
                            const Integer& p) {
  const Rational& N = verdict.N;
  const Rational& r = verdict.r;
  const Rational r2 = r * r;
  const Rational N2 = N * N;
  if (!(r2 * r - 3 * N * r - 2 * a * N).is_zero()) return false;
  if (!(r2 * r2 * r2 - 6 * N * r2 * r2 + 9 * N2 * r2 - 4 * N2 * a * a).is_zero()) return false;
  if ((r2 - N).sign() <= 0) return false;
  if (cube_surd(verdict.A, verdict.B, p) != std::pair(a, b)) return false;
  return true;
}

std::string to_string(const DenestVerdict& verdict) {
  if (const auto* d = std::get_if<Denested>(&verdict)) {
    return to_string(SurdElement{d->A, d->B, d->p});
  }
  if (const auto* n = std::get_if<NotACube>(&verdict)) {
    return "not denestable: N = " + n->N.to_string() + " is not a rational cube";
  }
  const auto& ri = std::get<ResolventIrreducible>(verdict);
  return "not denestable: resolvent " + to_string(ri.resolvent) + " has no rational root";
}

}  // namespace radiq
