#pragma once

// Arbitrary-precision binary floating point (MPFR underneath) plus the
// small complex layer the cubic solver needs. Precision is carried per
// value; binary operations round to the wider operand's precision.

#include "radiq/rational.hpp"

#include <cstdio>  // must precede mpfr.h for the mpfr_*printf declarations
#include <mpfr.h>

#include <string>
#include <utility>

namespace radiq {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64) {
    mpfr_init2(value_, prec);
    mpfr_set_zero(value_, 1);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(value_, mpfr_get_prec(o.value_));
    mpfr_set(value_, o.value_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(value_, mpfr_get_prec(o.value_));
    mpfr_swap(value_, o.value_);
  }
  BigFloat& operator=(BigFloat o) noexcept {
    mpfr_swap(value_, o.value_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(value_); }

  static BigFloat from_rational(const Rational& q, mpfr_prec_t prec);
  static BigFloat from_double(double d, mpfr_prec_t prec);
  // 2^k, exactly.
  static BigFloat power_of_two(long k, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  // Decimal rendering with the given number of significant digits.
  std::string to_decimal(int digits) const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }

  // Exact scaling by 2^k.
  BigFloat scaled_by_power_of_two(long k) const;

  mpfr_srcptr raw() const { return value_; }

  friend BigFloat sqrt(const BigFloat& x);
  friend BigFloat cbrt(const BigFloat& x);

 private:
  mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
// Real square root; throws std::domain_error for negative arguments.
BigFloat sqrt(const BigFloat& x);
// Real cube root (negative arguments give the negative real root).
BigFloat cbrt(const BigFloat& x);

struct BigComplex {
  BigFloat re;
  BigFloat im;

  explicit BigComplex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
  BigComplex(BigFloat real, BigFloat imag) : re(std::move(real)), im(std::move(imag)) {}

  bool is_real() const { return im.is_zero(); }
};

BigComplex conj(const BigComplex& z);
BigComplex operator+(const BigComplex& x, const BigComplex& y);
BigComplex operator-(const BigComplex& x, const BigComplex& y);
BigComplex operator*(const BigComplex& x, const BigComplex& y);
BigComplex operator/(const BigComplex& x, const BigComplex& y);
BigFloat modulus_squared(const BigComplex& z);

// A cube root of w, by Newton iteration from a double-precision seed; the
// branch is the principal branch of the seed. Real inputs take the real
// cube root.
BigComplex complex_cbrt(const BigComplex& w);

}  // namespace radiq
