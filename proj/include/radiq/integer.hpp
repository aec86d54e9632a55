#pragma once

// Arbitrary-precision integers plus the number-theoretic predicates the
// rest of the library is built on. Storage and ring arithmetic come from
// GMP; the exact root tests, divisor enumeration and squarefree split are
// implemented here.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace radiq {

using Integer = mpz_class;

// floor(sqrt(n)) for n >= 0, by Newton iteration on integers.
Integer integer_sqrt_floor(const Integer& n);

// Exact cube root: the k with k^3 == n, when it exists. The sign of k
// follows the sign of n.
std::optional<Integer> integer_cube_root(const Integer& n);

// Exact square root: the k >= 0 with k^2 == n, when n is a perfect square.
// Absent for negative n.
std::optional<Integer> integer_square_root(const Integer& n);

// All positive divisors of |n|, ascending, no duplicates. n must be nonzero.
std::vector<Integer> divisors(const Integer& n);

// n = square_root_part^2 * squarefree_part, with squarefree_part squarefree.
// Requires n > 0.
struct SquarefreeSplit {
  Integer square_root_part;
  Integer squarefree_part;
};
SquarefreeSplit squarefree_split(const Integer& n);

bool is_squarefree(const Integer& n);

Integer integer_pow(const Integer& base, unsigned long exponent);

std::string to_string(const Integer& n);

// Parses an optionally-signed decimal integer; throws std::invalid_argument
// on malformed input.
Integer parse_integer(const std::string& text);

}  // namespace radiq
