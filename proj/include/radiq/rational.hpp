#pragma once

// Exact rationals in canonical lowest terms: denominator > 0,
// gcd(|num|, den) = 1, zero represented uniquely as 0/1. All operations
// return new canonical values, so equality is plain value equality.

#include "radiq/integer.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace radiq {

class Rational {
 public:
  Rational() : value_(0) {}
  Rational(int n) : value_(n) {}
  Rational(long n) : value_(static_cast<signed long>(n)) {}
  Rational(const Integer& n) : value_(n) {}
  Rational(const Integer& num, const Integer& den);

  const Integer numerator() const { return value_.get_num(); }
  const Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return value_ == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  friend Rational operator+(const Rational& x, const Rational& y) { return Rational(x.value_ + y.value_); }
  friend Rational operator-(const Rational& x, const Rational& y) { return Rational(x.value_ - y.value_); }
  friend Rational operator*(const Rational& x, const Rational& y) { return Rational(x.value_ * y.value_); }
  friend Rational operator/(const Rational& x, const Rational& y);
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& x) { value_ += x.value_; return *this; }
  Rational& operator-=(const Rational& x) { value_ -= x.value_; return *this; }
  Rational& operator*=(const Rational& x) { value_ *= x.value_; return *this; }
  Rational& operator/=(const Rational& x) { return *this = *this / x; }

  friend bool operator==(const Rational& x, const Rational& y) { return x.value_ == y.value_; }
  friend bool operator!=(const Rational& x, const Rational& y) { return x.value_ != y.value_; }
  friend bool operator<(const Rational& x, const Rational& y) { return x.value_ < y.value_; }
  friend bool operator>(const Rational& x, const Rational& y) { return x.value_ > y.value_; }
  friend bool operator<=(const Rational& x, const Rational& y) { return x.value_ <= y.value_; }
  friend bool operator>=(const Rational& x, const Rational& y) { return x.value_ >= y.value_; }

  // "-22/7", or just "5" for integers.
  std::string to_string() const;

  mpq_srcptr raw() const { return value_.get_mpq_t(); }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;  // invariant: canonical
};

// Canonical lowest-terms form with positive denominator; throws on den == 0.
Rational normalize_rational(const Integer& num, const Integer& den);

// Parses "n" or "n/d" decimal forms; throws std::invalid_argument on
// malformed text and std::domain_error on a zero denominator.
Rational parse_rational(const std::string& text);

Rational abs(const Rational& q);
Rational rational_pow(const Rational& base, unsigned long exponent);

// The unique rational t with t^3 == q, when q is a rational cube. For
// q = m/n in lowest terms this holds exactly when m and n are both
// integer cubes.
std::optional<Rational> rational_cube_root(const Rational& q);

// The nonnegative rational s with s^2 == q, when q >= 0 is a rational
// square. Absent for negative q.
std::optional<Rational> rational_square_root(const Rational& q);

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace radiq
