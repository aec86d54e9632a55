#include "radiq/sextic.hpp"

#include "radiq/denest.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <stdexcept>
#include <variant>

using namespace radiq;

namespace {

void check_reconstruction(const SexticFactorization& f) {
  CHECK(expand_factors(f) == sextic_polynomial(f.c, f.d));
  for (const RationalPolynomial& factor : f.factors) {
    CHECK(factor.leading_coefficient() == Rational(1));
    if (factor.degree() == 2) {
      // a prime quadratic has a non-square discriminant
      const Rational disc =
          factor.coefficient(1) * factor.coefficient(1) - 4 * factor.coefficient(0);
      CHECK(!rational_square_root(disc));
    }
    if (factor.degree() == 4) {
      CHECK(rational_roots(factor).empty());
    }
  }
}

}  // namespace

TEST_CASE("row 5: x^6 - 14x^3 - 1 (the worked example's sextic)") {
  const SexticFactorization f = classify_sextic(-14, -1);
  CHECK(f.row == 5);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == RationalPolynomial{-1, -2, 1});
  CHECK(f.factors[1] == RationalPolynomial{1, -2, 5, 2, 1});
  CHECK(f.evidence.delta == Rational(200));
  CHECK(!f.evidence.sqrt_delta);
  CHECK(f.evidence.cbrt_d == Rational(-1));
  CHECK(f.evidence.resolvent == RationalPolynomial{14, 3, 0, 1});
  CHECK(f.evidence.resolvent_roots == std::set<Rational>{Rational(-2)});
  check_reconstruction(f);
  CHECK(to_string(f) ==
        "x^6 - 14*x^3 - 1 = (x^2 - 2*x - 1)(x^4 + 2*x^3 + 5*x^2 - 2*x + 1)");
}

TEST_CASE("row 4: x^6 - 9x^3 + 8") {
  const SexticFactorization f = classify_sextic(-9, 8);
  CHECK(f.row == 4);
  REQUIRE(f.factors.size() == 4);
  CHECK(f.factors[0] == RationalPolynomial{-2, 1});
  CHECK(f.factors[1] == RationalPolynomial{-1, 1});
  CHECK(f.factors[2] == RationalPolynomial{1, 1, 1});
  CHECK(f.factors[3] == RationalPolynomial{4, 2, 1});
  CHECK(f.evidence.sqrt_delta == Rational(7));
  check_reconstruction(f);
}

TEST_CASE("row 2: x^6 - 5x^3 + 6") {
  const SexticFactorization f = classify_sextic(-5, 6);
  CHECK(f.row == 2);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == RationalPolynomial{-3, 0, 0, 1});
  CHECK(f.factors[1] == RationalPolynomial{-2, 0, 0, 1});
  CHECK(f.evidence.sqrt_delta == Rational(1));
  check_reconstruction(f);
}

TEST_CASE("row 3: x^6 - 11x^3 + 24") {
  const SexticFactorization f = classify_sextic(-11, 24);
  CHECK(f.row == 3);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0] == RationalPolynomial{-2, 1});
  CHECK(f.factors[1] == RationalPolynomial{4, 2, 1});
  CHECK(f.factors[2] == RationalPolynomial{-3, 0, 0, 1});
  CHECK(f.evidence.sqrt_delta == Rational(5));
  check_reconstruction(f);
}

TEST_CASE("row 3 with the rational cube root on the minus branch") {
  // alpha^3 = 2 (not a cube), beta^3 = 1: c = -3, d = 2
  const SexticFactorization f = classify_sextic(-3, 2);
  CHECK(f.row == 3);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0] == RationalPolynomial{-1, 1});
  CHECK(f.factors[1] == RationalPolynomial{1, 1, 1});
  CHECK(f.factors[2] == RationalPolynomial{-2, 0, 0, 1});
  check_reconstruction(f);
}

TEST_CASE("row 5: x^6 + 1") {
  const SexticFactorization f = classify_sextic(0, 1);
  CHECK(f.row == 5);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == RationalPolynomial{1, 0, 1});
  CHECK(f.factors[1] == RationalPolynomial{1, 0, -1, 0, 1});
  CHECK(f.evidence.delta == Rational(-4));
  CHECK(f.evidence.cbrt_d == Rational(1));
  CHECK(f.evidence.resolvent_roots == std::set<Rational>{Rational(0)});
  check_reconstruction(f);
}

TEST_CASE("row 1: x^6 + x^3 + 1") {
  const SexticFactorization f = classify_sextic(1, 1);
  CHECK(f.row == 1);
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0] == sextic_polynomial(1, 1));
  CHECK(f.evidence.delta == Rational(-3));
  CHECK(f.evidence.cbrt_d == Rational(1));
  CHECK(f.evidence.resolvent_roots.empty());
  CHECK(to_string(f) == "x^6 + x^3 + 1 is irreducible");
}

TEST_CASE("row 1 when d is not a cube") {
  const SexticFactorization f = classify_sextic(1, 2);  // delta = -7, cbrt(2) irrational
  CHECK(f.row == 1);
  CHECK(!f.evidence.sqrt_delta);
  CHECK(!f.evidence.cbrt_d);
  check_reconstruction(f);
}

TEST_CASE("row 6: x^6 - (286/343)x^3 + 1") {
  const SexticFactorization f = classify_sextic(Rational(-286, 343), 1);
  CHECK(f.row == 6);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0] == RationalPolynomial{1, Rational(-13, 7), 1});
  CHECK(f.factors[1] == RationalPolynomial{1, Rational(2, 7), 1});
  CHECK(f.factors[2] == RationalPolynomial{1, Rational(11, 7), 1});
  CHECK(f.evidence.resolvent_roots ==
        std::set<Rational>{Rational(-2, 7), Rational(-11, 7), Rational(13, 7)});
  check_reconstruction(f);
}

TEST_CASE("row 6 occurs with integer coefficients: x^6 + 27") {
  const SexticFactorization f = classify_sextic(0, 27);
  CHECK(f.row == 6);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0] == RationalPolynomial{3, -3, 1});
  CHECK(f.factors[1] == RationalPolynomial{3, 0, 1});
  CHECK(f.factors[2] == RationalPolynomial{3, 3, 1});
  CHECK(f.evidence.cbrt_d == Rational(3));
  CHECK(f.evidence.resolvent_roots ==
        std::set<Rational>{Rational(-9), Rational(0), Rational(9)});
  check_reconstruction(f);
}

TEST_CASE("d = 0 is out of the table") {
  CHECK_THROWS_WITH_AS(classify_sextic(3, 0), "degenerate: factor x^3 first", std::domain_error);
}

TEST_CASE("random quadratic-split sextics reconstruct (rows 2-4)") {
  testing::Rng rng(0x6a7b1);
  for (int trial = 0; trial < 150; ++trial) {
    // build c, d from chosen alpha^3 and beta^3, so sqrt(delta) is rational
    Rational alpha_cubed = rng.rational(15, 4, true);
    Rational beta_cubed = rng.rational(15, 4, true);
    if (rng.integer_in(0, 1)) alpha_cubed = alpha_cubed * alpha_cubed * alpha_cubed;
    if (rng.integer_in(0, 1)) beta_cubed = beta_cubed * beta_cubed * beta_cubed;
    const Rational c = -(alpha_cubed + beta_cubed);
    const Rational d = alpha_cubed * beta_cubed;
    const SexticFactorization f = classify_sextic(c, d);
    CHECK((f.row >= 2 && f.row <= 4));
    check_reconstruction(f);
  }
}

TEST_CASE("random completely-reducible resolvents land in row 6") {
  testing::Rng rng(0x6a7b2);
  int checked = 0;
  while (checked < 60) {
    // alpha+beta = 2s and alpha*beta = t = s^2 + 3m^2: then -3((2s)^2 - 4t)
    // is the square (6m)^2 and the resolvent splits completely over Q
    const Rational s{Integer(rng.integer_in(-4, 4)), 1};
    const Rational m{Integer(rng.integer_in(1, 4)), 1};
    const Rational t = s * s + 3 * m * m;
    const Rational c = 6 * t * s - 8 * s * s * s;
    const Rational d = t * t * t;
    const Rational delta = c * c - 4 * d;
    if (rational_square_root(delta)) continue;  // a repeated root degenerates into rows 2-4
    const SexticFactorization f = classify_sextic(c, d);
    CHECK(f.row == 6);
    CHECK(f.factors.size() == 3);
    check_reconstruction(f);
    ++checked;
  }
}

TEST_CASE("a reducible sextic with irrational sqrt(delta) forces rational cbrt(d) and a reducible resolvent") {
  testing::Rng rng(0x6a7b3);
  for (int trial = 0; trial < 300; ++trial) {
    const Rational c = rng.rational(12, 4);
    const Rational d = rng.rational(12, 4, true);
    const SexticFactorization f = classify_sextic(c, d);
    check_reconstruction(f);
    if (f.evidence.sqrt_delta) continue;  // only the irrational-sqrt(delta) regime is constrained
    const bool cube_and_reducible = f.evidence.cbrt_d && !f.evidence.resolvent_roots.empty();
    if (f.row == 1) {
      CHECK(!cube_and_reducible);
    } else {
      CHECK((f.row == 5 || f.row == 6));
      CHECK(cube_and_reducible);
    }
  }
}

TEST_CASE("denesting consistency: the sextic of a denestable radical is row 5") {
  testing::Rng rng(0x6a7b4);
  const auto ps = testing::squarefree_up_to(20);
  for (int trial = 0; trial < 80; ++trial) {
    const Rational A = rng.rational(8, 4);
    const Rational B = rng.rational(8, 4, true);
    const Integer p = ps[static_cast<std::size_t>(rng.integer_in(0, static_cast<long>(ps.size()) - 1))];
    const auto [a, b] = cube_surd(A, B, p);
    const DenestVerdict verdict = denest(a, b, Rational(p));
    REQUIRE(std::holds_alternative<Denested>(verdict));
    const Denested& den = std::get<Denested>(verdict);
    // f(x) = x^6 - 2a x^3 + N factors with the minimal polynomial in front
    const SexticFactorization f = classify_sextic(-2 * a, den.N);
    CHECK(f.row == 5);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == den.min_poly);
    check_reconstruction(f);
  }
}
