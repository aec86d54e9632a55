#include "radiq/integer.hpp"

#include <algorithm>
#include <stdexcept>

namespace radiq {

Integer integer_sqrt_floor(const Integer& n) {
  if (n < 0) throw std::domain_error("integer_sqrt_floor: negative argument");
  if (n == 0) return 0;
  // Newton on f(x) = x^2 - n, started above the root so the iteration
  // decreases monotonically; the trailing adjustment pins the exact floor.
  Integer x = Integer(1) << (mpz_sizeinbase(n.get_mpz_t(), 2) / 2 + 1);
  while (true) {
    Integer y = (x + n / x) / 2;
    if (y >= x) break;
    x = y;
  }
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

static Integer cube_root_floor(const Integer& n) {
  // n >= 0
  if (n == 0) return 0;
  Integer x = Integer(1) << (mpz_sizeinbase(n.get_mpz_t(), 2) / 3 + 2);
  while (true) {
    Integer y = (2 * x + n / (x * x)) / 3;
    if (y >= x) break;
    x = y;
  }
  while (x * x * x > n) --x;
  while ((x + 1) * (x + 1) * (x + 1) <= n) ++x;
  return x;
}

std::optional<Integer> integer_cube_root(const Integer& n) {
  const Integer m = abs(n);
  const Integer k = cube_root_floor(m);
  if (k * k * k != m) return std::nullopt;
  return n < 0 ? Integer(-k) : k;
}

std::optional<Integer> integer_square_root(const Integer& n) {
  if (n < 0) return std::nullopt;
  const Integer k = integer_sqrt_floor(n);
  if (k * k != n) return std::nullopt;
  return k;
}

std::vector<Integer> divisors(const Integer& n) {
  if (n == 0) throw std::domain_error("divisors of zero undefined");
  const Integer m = abs(n);
  std::vector<Integer> low, high;
  for (Integer d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      low.push_back(d);
      if (d * d != m) high.push_back(m / d);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

SquarefreeSplit squarefree_split(const Integer& n) {
  if (n <= 0) throw std::domain_error("squarefree_split: argument must be positive");
  Integer rest = n;
  Integer square_root_part = 1;
  Integer squarefree_part = 1;
  for (Integer d = 2; d * d <= rest; ++d) {
    if (rest % d != 0) continue;
    unsigned long multiplicity = 0;
    while (rest % d == 0) {
      rest /= d;
      ++multiplicity;
    }
    square_root_part *= integer_pow(d, multiplicity / 2);
    if (multiplicity % 2 == 1) squarefree_part *= d;
  }
  squarefree_part *= rest;
  return {square_root_part, squarefree_part};
}

bool is_squarefree(const Integer& n) {
  return squarefree_split(n).square_root_part == 1;
}

Integer integer_pow(const Integer& base, unsigned long exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

std::string to_string(const Integer& n) { return n.get_str(); }

Integer parse_integer(const std::string& text) {
  return Integer(text, 10);  // throws std::invalid_argument on bad input
}

}  // namespace radiq
