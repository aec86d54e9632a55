// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include "radiq/cubic.hpp"
#include "radiq/denest.hpp"
#include "radiq/sextic.hpp"

#include "oracles.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

using namespace radiq;
using namespace radiq::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

// Every Denested verdict produced by criteria 1-3, with its (a, b, p) input;
// criterion 5 replays the identity suite over all of them.
std::vector<std::tuple<Denested, Rational, Rational, Integer>> produced;

void run(int index, const std::string& description, double budget_ms,
         const std::function<Outcome()>& criterion) {
  const auto t0 = Clock::now();
  Outcome outcome{false, "exception"};
  try {
    outcome = criterion();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  const bool in_budget = budget_ms <= 0 || ms <= budget_ms;
  const bool pass = outcome.pass && in_budget;
  std::ostringstream line;
  line << (pass ? "PASS" : "FAIL") << " criterion " << index << ": " << description << " ["
       << std::fixed << std::setprecision(1) << ms << " ms";
  if (budget_ms > 0) line << " / " << std::setprecision(0) << budget_ms << " ms budget";
  line << "]";
  if (!outcome.pass) {
    line << " -- " << outcome.detail;
  } else if (!in_budget) {
    line << " -- over the time budget";
  }
  std::cout << line.str() << std::endl;
  if (!pass) ++failures;
}

Outcome criterion1_worked_example() {
  const DenestVerdict plus = denest(7, 5, 2);
  const DenestVerdict minus = denest(7, -5, 2);
  const auto* dp = std::get_if<Denested>(&plus);
  const auto* dm = std::get_if<Denested>(&minus);
  if (!dp || !dm) return {false, "cbrt(7 +- 5 sqrt(2)) did not denest"};
  if (!(dp->A == Rational(1) && dp->B == Rational(1))) return {false, "(A, B) != (1, 1)"};
  if (!(dm->A == Rational(1) && dm->B == Rational(-1))) return {false, "(A, B) != (1, -1)"};
  if (!(dp->N == Rational(-1) && dm->N == Rational(-1))) return {false, "N != -1"};
  if (!(dp->r == Rational(-2) && dm->r == Rational(-2))) return {false, "r != -2"};
  const RationalPolynomial expected_min_poly{-1, -2, 1};
  if (!(dp->min_poly == expected_min_poly && dm->min_poly == expected_min_poly)) {
    return {false, "min_poly != x^2 - 2x - 1"};
  }
  produced.emplace_back(*dp, 7, 5, 2);
  produced.emplace_back(*dm, 7, -5, 2);
  return {true, ""};
}

Outcome criterion2_round_trip() {
  Rng rng(0xacce52);
  const auto ps = squarefree_up_to(50);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational A = rng.rational(20, 20);
    const Rational B = rng.rational(20, 20, true);
    const Integer p = ps[static_cast<std::size_t>(rng.integer_in(0, static_cast<long>(ps.size()) - 1))];
    const auto [a, b] = cube_surd(A, B, p);
    const DenestVerdict verdict = denest(a, b, Rational(p));
    const auto* d = std::get_if<Denested>(&verdict);
    if (!d) {
      return {false, "trial " + std::to_string(trial) + ": forward cube did not denest"};
    }
    if (!(d->A == A && d->B == B)) {
      return {false, "trial " + std::to_string(trial) + ": recovered (A, B) differs"};
    }
    produced.emplace_back(*d, a, b, p);
  }
  return {true, ""};
}

Outcome criterion3_completeness_grid() {
  const std::array<long, 6> ps{2, 3, 5, 6, 7, 10};
  int denested_cells = 0;
  for (const long p_raw : ps) {
    const Integer p(p_raw);
    const WitnessTable table = forward_cube_witnesses(p, 30, 10);
    for (long a = -10; a <= 10; ++a) {
      for (long b = -10; b <= 10; ++b) {
        if (b == 0) continue;
        const DenestVerdict verdict = denest(a, b, Rational(p));
        const auto* d = std::get_if<Denested>(&verdict);
        const auto hit = table.find({Rational(a), Rational(b)});
        const std::string cell = "cell (a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                                 ", p=" + std::to_string(p_raw) + ")";
        if (d && hit == table.end()) {
          return {false, cell + ": denest found a witness the oracle missed"};
        }
        if (!d && hit != table.end()) {
          return {false, cell + ": oracle found a witness denest missed"};
        }
        if (d) {
          if (!(d->A == hit->second.first && d->B == hit->second.second)) {
            return {false, cell + ": witnesses differ"};
          }
          produced.emplace_back(*d, a, b, p);
          ++denested_cells;
        }
      }
    }
  }
  if (denested_cells == 0) return {false, "no denestable cell on the grid (generator defect)"};
  return {true, ""};
}

Outcome criterion4_table_coverage() {
  struct Instance {
    Rational c;
    Rational d;
    int expected_row;
  };
  const std::vector<Instance> instances{
      {-14, -1, 5}, {-9, 8, 4},  {-5, 6, 2},          {-11, 24, 3},
      {0, 1, 5},    {1, 1, 1},   {Rational(-286, 343), 1, 6}, {0, 27, 6}};
  std::set<int> rows_seen;
  for (const Instance& instance : instances) {
    const SexticFactorization f = classify_sextic(instance.c, instance.d);
    const std::string label =
        "(c=" + instance.c.to_string() + ", d=" + instance.d.to_string() + ")";
    if (f.row != instance.expected_row) {
      return {false, label + ": row " + std::to_string(f.row) + ", expected " +
                         std::to_string(instance.expected_row)};
    }
    rows_seen.insert(f.row);
    if (expand_factors(f) != sextic_polynomial(instance.c, instance.d)) {
      return {false, label + ": product of factors differs from x^6 + cx^3 + d"};
    }
    for (const RationalPolynomial& factor : f.factors) {
      if (factor.degree() == 2) {
        const Rational disc =
            factor.coefficient(1) * factor.coefficient(1) - 4 * factor.coefficient(0);
        if (rational_square_root(disc)) {
          return {false, label + ": a quadratic factor has a square discriminant"};
        }
      }
      if (f.row == 5 && factor.degree() == 4 && !rational_roots(factor).empty()) {
        return {false, label + ": the row-5 quartic has a rational root"};
      }
    }
  }
  if (rows_seen != std::set<int>{1, 2, 3, 4, 5, 6}) {
    return {false, "the instances do not cover all six rows"};
  }
  return {true, ""};
}

Outcome criterion5_identity_suite() {
  if (produced.size() < 502) {
    return {false, "criteria 1-3 produced too few Denested verdicts (" +
                       std::to_string(produced.size()) + ")"};
  }
  for (const auto& [d, a, b, p] : produced) {
    if (!certificate_identities(d, a, b, p)) {
      return {false, "certificate identities failed for a = " + a.to_string() +
                         ", b = " + b.to_string() + ", p = " + to_string(p)};
    }
    const Rational N = d.N;
    const RationalPolynomial s_poly{2 * N * N * N - 4 * N * N * a * a, -3 * N * N, 0, 1};
    if (!s_poly.evaluate(d.r * d.r - 2 * N).is_zero()) {
      return {false, "s = r^2 - 2N is not a root of S(x) for a = " + a.to_string() +
                         ", b = " + b.to_string() + ", p = " + to_string(p)};
    }
  }
  return {true, std::to_string(produced.size()) + " verdicts checked"};
}

Outcome criterion6_cubic_solver() {
  Rng rng(0xacce56);

  // planted rational roots, recovered exactly
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> planted{rng.rational(12, 6), rng.rational(12, 6), rng.rational(12, 6)};
    RationalPolynomial h{1};
    for (const Rational& r : planted) h = h * RationalPolynomial{-r, 1};
    const CubicRoots roots =
        solve_cubic(1, h.coefficient(2), h.coefficient(1), h.coefficient(0), 128);
    std::sort(planted.begin(), planted.end());
    if (roots.exact_roots != planted || !roots.numeric_roots.empty()) {
      return {false, "planted roots not recovered at trial " + std::to_string(trial)};
    }
  }

  // random cubics at 128 bits: residual and classification agreement
  const BigFloat bound = BigFloat::power_of_two(-64, 256);
  const BigFloat bound_sq = bound * bound;
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a3 = rng.rational(30, 6, true);
    const Rational a2 = rng.rational(30, 6);
    const Rational a1 = rng.rational(30, 6);
    const Rational a0 = rng.rational(30, 6);
    const CubicRoots roots = solve_cubic(a3, a2, a1, a0, 128);
    const std::string label = "trial " + std::to_string(trial);

    const RationalPolynomial h{a0, a1, a2, a3};
    for (const Rational& r : roots.exact_roots) {
      if (!h.evaluate(r).is_zero()) return {false, label + ": inexact rational root"};
    }
    for (const CubicRoots::Numeric& z : roots.numeric_roots) {
      BigComplex acc(256);
      const BigComplex zc{z.re, z.im};
      for (int i = 3; i >= 0; --i) {
        acc = acc * zc + BigComplex{BigFloat::from_rational(h.coefficient(i), 256), BigFloat(256)};
      }
      if (!(modulus_squared(acc) <= bound_sq)) {
        return {false, label + ": residual above 2^-64"};
      }
    }

    std::set<Rational> distinct_exact(roots.exact_roots.begin(), roots.exact_roots.end());
    int reals = static_cast<int>(distinct_exact.size());
    for (const CubicRoots::Numeric& z : roots.numeric_roots) {
      if (z.im.is_zero()) ++reals;
    }
    const DepressedCubic dep = depress_cubic(a2 / a3, a1 / a3, a0 / a3);
    switch (classify_real_roots(dep.P, dep.Q)) {
      case RootClass::three_distinct_real:
        if (reals != 3) return {false, label + ": expected 3 distinct real roots"};
        break;
      case RootClass::one_real:
        if (reals != 1) return {false, label + ": expected 1 real root"};
        break;
      case RootClass::multiple_root:
        if (!roots.numeric_roots.empty() || reals >= 3) {
          return {false, label + ": multiple-root case not reported exactly"};
        }
        break;
    }
  }
  return {true, ""};
}

Outcome criterion7_cube_test_equivalence() {
  Rng rng(0xacce57);
  for (int trial = 0; trial < 10000; ++trial) {
    const Integer n(rng.integer_in(-1000000, 1000000));
    if (integer_cube_root(n).has_value() != cube_by_factorization(n)) {
      return {false, "integer disagreement at n = " + to_string(n)};
    }
    if (n != 0 && rational_cube_root(Rational(n)).has_value() != cube_by_factorization(n)) {
      return {false, "rational embedding disagreement at n = " + to_string(n)};
    }
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const Rational q = rng.rational(1000000, 1000);
    if (rational_cube_root(q).has_value() != rational_cube_by_factorization(q)) {
      return {false, "rational disagreement at q = " + q.to_string()};
    }
  }
  return {true, ""};
}

}  // namespace

int main() {
  std::cout << "radiq acceptance suite\n";
  run(1, "cbrt(7 +- 5 sqrt(2)) denests to 1 +- sqrt(2), exactly", 10.0, criterion1_worked_example);
  run(2, "round-trip soundness on 500 random cubes", 5000.0, criterion2_round_trip);
  run(3, "completeness against the brute-force oracle on the exhaustive grid", 60000.0,
      criterion3_completeness_grid);
  run(4, "all six sextic factorization shapes are reached and reconstruct", 1000.0,
      criterion4_table_coverage);
  run(5, "certificate identity suite over every Denested verdict", 0.0,
      criterion5_identity_suite);
  run(6, "cubic solver: planted roots, residuals, classification", 10000.0,
      criterion6_cubic_solver);
  run(7, "cube test equivalent to the factorization-multiplicity criterion", 0.0,
      criterion7_cube_test_equivalence);
  if (failures == 0) {
    std::cout << "all criteria passed\n";
  } else {
    std::cout << failures << " criteria failed\n";
  }
  return failures;
}
