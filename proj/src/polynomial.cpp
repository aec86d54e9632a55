#include "radiq/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace radiq {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<Rational> coefficients)
    : coefficients_(coefficients) {
  trim();
}

void RationalPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

Rational RationalPolynomial::leading_coefficient() const {
  if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
  return coefficients_.back();
}

Rational RationalPolynomial::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coefficients_.size(); ++i)
    d.push_back(Rational(Integer(i)) * coefficients_[i]);
  return RationalPolynomial(std::move(d));
}

RationalPolynomial operator+(const RationalPolynomial& x, const RationalPolynomial& y) {
  std::vector<Rational> sum(std::max(x.coefficients_.size(), y.coefficients_.size()));
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = x.coefficient(i) + y.coefficient(i);
  return RationalPolynomial(std::move(sum));
}

RationalPolynomial operator-(const RationalPolynomial& x, const RationalPolynomial& y) {
  std::vector<Rational> diff(std::max(x.coefficients_.size(), y.coefficients_.size()));
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = x.coefficient(i) - y.coefficient(i);
  return RationalPolynomial(std::move(diff));
}

RationalPolynomial operator*(const RationalPolynomial& x, const RationalPolynomial& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<Rational> prod(x.coefficients_.size() + y.coefficients_.size() - 1);
  for (std::size_t i = 0; i < x.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < y.coefficients_.size(); ++j)
      prod[i + j] += x.coefficients_[i] * y.coefficients_[j];
  return RationalPolynomial(std::move(prod));
}

RationalPolynomial RationalPolynomial::operator-() const {
  std::vector<Rational> neg(coefficients_.size());
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -coefficients_[i];
  return RationalPolynomial(std::move(neg));
}

RationalPolynomial operator*(const Rational& s, const RationalPolynomial& x) {
  std::vector<Rational> scaled(x.coefficients_.size());
  for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] = s * x.coefficients_[i];
  return RationalPolynomial(std::move(scaled));
}

PolynomialDivision poly_divmod(const RationalPolynomial& dividend,
                               const RationalPolynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = dividend.coefficients();
  const int dd = divisor.degree();
  const Rational lead = divisor.leading_coefficient();
  if (dividend.degree() < dd) return {{}, dividend};
  std::vector<Rational> quot(dividend.degree() - dd + 1);
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    const Rational c = rem[k + dd] / lead;
    quot[k] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= c * divisor.coefficient(j);
  }
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial poly_gcd(const RationalPolynomial& x, const RationalPolynomial& y) {
  RationalPolynomial a = x, b = y;
  while (!b.is_zero()) {
    RationalPolynomial r = poly_divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (Rational(1) / a.leading_coefficient()) * a;
}

RationalPolynomial clear_denominators(const RationalPolynomial& h) {
  if (h.is_zero()) throw std::domain_error("clear_denominators: zero polynomial");
  Integer common = 1;
  for (const Rational& c : h.coefficients()) common = lcm(common, c.denominator());
  std::vector<Integer> scaled;
  Integer content = 0;
  for (const Rational& c : h.coefficients()) {
    const Rational v = Rational(common) * c;
    scaled.push_back(v.numerator());
    content = gcd(content, scaled.back());
  }
  std::vector<Rational> out;
  out.reserve(scaled.size());
  for (const Integer& k : scaled) out.push_back(Rational(Integer(k / content)));
  return RationalPolynomial(std::move(out));
}

static RationalPolynomial strip_zero_root(const RationalPolynomial& h, bool& had_zero_root) {
  std::vector<Rational> c = h.coefficients();
  std::size_t shift = 0;
  while (shift < c.size() - 1 && c[shift].is_zero()) ++shift;
  had_zero_root = shift > 0;
  return RationalPolynomial(std::vector<Rational>(c.begin() + shift, c.end()));
}

namespace {

// The divisor-grid procedure of the rational root theorem: candidates
// +-m/n with m | constant and n | leading. Used while both ends stay at
// trial-division scale.
void roots_by_divisor_grid(const RationalPolynomial& g, std::set<Rational>& roots) {
  const std::vector<Integer> ms = divisors(g.coefficient(0).numerator());
  const std::vector<Integer> ns = divisors(g.leading_coefficient().numerator());
  std::set<Rational> candidates;
  for (const Integer& m : ms)
    for (const Integer& n : ns) {
      const Rational c(m, n);
      candidates.insert(c);
      candidates.insert(-c);
    }
  for (const Rational& c : candidates)
    if (g.evaluate(c).is_zero()) roots.insert(c);
}

int sign_variations(const std::vector<RationalPolynomial>& chain, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const RationalPolynomial& p : chain) {
    const int s = p.evaluate(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

struct IntegerRootIsolation {
  const RationalPolynomial& squarefree;  // squarefree part, same root set
  const RationalPolynomial& monic;       // integer-coefficient monic form
  std::vector<RationalPolynomial> chain;
  std::set<Integer> roots;

  int variations(const Integer& x) const { return sign_variations(chain, Rational(x)); }

  bool is_root(const Integer& x) {
    if (!monic.evaluate(Rational(x)).is_zero()) return false;
    roots.insert(x);
    return true;
  }

  // Invariant: squarefree(lo) != 0, squarefree(hi) != 0, lo < hi; v* are the
  // Sturm variation counts at the endpoints, so v_lo - v_hi bounds the
  // distinct real roots in (lo, hi).
  void isolate(const Integer& lo, int v_lo, const Integer& hi, int v_hi) {
    if (v_lo - v_hi <= 0) return;
    if (hi - lo == 1) return;  // a single non-integer root remains inside
    Integer mid = (lo + hi) / 2;
    if (squarefree.evaluate(Rational(mid)).is_zero()) {
      is_root(mid);
      // step off the root (neighbors may be roots of their own)
      Integer below = mid - 1;
      while (below > lo && squarefree.evaluate(Rational(below)).is_zero()) {
        is_root(below);
        --below;
      }
      Integer above = mid + 1;
      while (above < hi && squarefree.evaluate(Rational(above)).is_zero()) {
        is_root(above);
        ++above;
      }
      if (below > lo) isolate(lo, v_lo, below, variations(below));
      if (above < hi) isolate(above, variations(above), hi, v_hi);
      return;
    }
    const int v_mid = variations(mid);
    isolate(lo, v_lo, mid, v_mid);
    isolate(mid, v_mid, hi, v_hi);
  }
};

// Exact root search for integer-coefficient g of any scale. Substituting
// y = lead * x turns g monic over the integers, so every rational root of g
// is an integer y; those are isolated by bisection with a Sturm chain.
void roots_by_integer_isolation(const RationalPolynomial& g, std::set<Rational>& roots) {
  const Integer lead = g.leading_coefficient().numerator();
  const int degree = g.degree();
  std::vector<Rational> monic_coeffs(static_cast<std::size_t>(degree) + 1);
  monic_coeffs[static_cast<std::size_t>(degree)] = 1;
  for (int i = 0; i < degree; ++i) {
    monic_coeffs[static_cast<std::size_t>(i)] =
        g.coefficient(static_cast<std::size_t>(i)) *
        Rational(integer_pow(lead, static_cast<unsigned long>(degree - 1 - i)));
  }
  const RationalPolynomial monic(std::move(monic_coeffs));

  const RationalPolynomial gcd = poly_gcd(monic, monic.derivative());
  const RationalPolynomial squarefree =
      gcd.degree() >= 1 ? poly_divmod(monic, gcd).quotient : monic;

  // |x| < 1 + max|g_i| / |lead| gives |y| < |lead| + max|g_i| =: M
  Integer max_abs = 0;
  for (int i = 0; i < degree; ++i) {
    const Integer a = abs(g.coefficient(static_cast<std::size_t>(i)).numerator());
    if (a > max_abs) max_abs = a;
  }
  const Integer bound = abs(lead) + max_abs + 1;

  IntegerRootIsolation isolation{squarefree, monic, {}, {}};
  isolation.chain.push_back(squarefree);
  isolation.chain.push_back(squarefree.derivative());
  while (isolation.chain.back().degree() >= 1) {
    const RationalPolynomial rem =
        poly_divmod(isolation.chain[isolation.chain.size() - 2], isolation.chain.back()).remainder;
    if (rem.is_zero()) break;
    isolation.chain.push_back(-rem);
  }

  isolation.isolate(-bound, isolation.variations(-bound), bound, isolation.variations(bound));
  for (const Integer& y : isolation.roots) roots.insert(Rational(y, lead));
}

}  // namespace

std::set<Rational> rational_roots(const RationalPolynomial& h) {
  if (h.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  std::set<Rational> roots;
  if (h.degree() < 1) return roots;
  bool had_zero_root = false;
  RationalPolynomial g = strip_zero_root(h, had_zero_root);
  if (had_zero_root) roots.insert(Rational(0));
  if (g.degree() < 1) return roots;
  g = clear_denominators(g);
  const Integer grid_limit("100000000");
  if (abs(g.coefficient(0).numerator()) <= grid_limit &&
      abs(g.leading_coefficient().numerator()) <= grid_limit) {
    roots_by_divisor_grid(g, roots);
  } else {
    roots_by_integer_isolation(g, roots);
  }
  return roots;
}

DepressedCubic depress_cubic(const Rational& a2, const Rational& a1, const Rational& a0) {
  const Rational P = (3 * a1 - a2 * a2) / 3;
  const Rational Q = (2 * a2 * a2 * a2 - 9 * a1 * a2 + 27 * a0) / 27;
  return {P, Q, a2 / 3};
}

Rational cubic_delta(const Rational& P, const Rational& Q) {
  if (P.is_zero()) throw std::domain_error("delta undefined for P=0");
  return (27 * Q * Q + 4 * P * P * P) / (3 * P * P);
}

RootClass classify_real_roots(const Rational& P, const Rational& Q) {
  if (P.is_zero()) {
    // x^3 = -Q: one real root, of multiplicity 3 exactly when Q = 0.
    return Q.is_zero() ? RootClass::multiple_root : RootClass::one_real;
  }
  const int s = cubic_delta(P, Q).sign();
  if (s < 0) return RootClass::three_distinct_real;
  if (s == 0) return RootClass::multiple_root;
  return RootClass::one_real;
}

std::string to_string(const RationalPolynomial& h) {
  if (h.is_zero()) return "0";
  std::string out;
  for (int k = h.degree(); k >= 0; --k) {
    const Rational c = h.coefficient(k);
    if (c.is_zero()) continue;
    const bool first = out.empty();
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const Rational mag = abs(c);
    std::string var = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    if (k == 0) {
      out += mag.to_string();
    } else if (mag == 1) {
      out += var;
    } else {
      const std::string cs = mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")";
      out += cs + "*" + var;
    }
  }
  return out;
}

}  // namespace radiq
