#include "radiq/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace radiq {

BigFloat BigFloat::from_rational(const Rational& q, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_q(r.value_, q.raw(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_double(double d, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_d(r.value_, d, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::power_of_two(long k, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_si(r.value_, 1, MPFR_RNDN);
  mpfr_mul_2si(r.value_, r.value_, k, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_decimal(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits, value_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::max(a.precision(), b.precision()));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::max(a.precision(), b.precision()));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::max(a.precision(), b.precision()));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  if (b.is_zero()) throw std::domain_error("BigFloat division by zero");
  BigFloat r(std::max(a.precision(), b.precision()));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::scaled_by_power_of_two(long k) const {
  BigFloat r(precision());
  mpfr_mul_2si(r.value_, value_, k, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& x) { return x.sign() < 0 ? -x : x; }

BigFloat sqrt(const BigFloat& x) {
  if (x.sign() < 0) throw std::domain_error("sqrt of negative BigFloat");
  BigFloat r(x.precision());
  mpfr_sqrt(r.value_, x.value_, MPFR_RNDN);
  return r;
}

BigFloat cbrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_cbrt(r.value_, x.value_, MPFR_RNDN);
  return r;
}

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigComplex operator+(const BigComplex& x, const BigComplex& y) {
  return {x.re + y.re, x.im + y.im};
}

BigComplex operator-(const BigComplex& x, const BigComplex& y) {
  return {x.re - y.re, x.im - y.im};
}

BigComplex operator*(const BigComplex& x, const BigComplex& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

BigComplex operator/(const BigComplex& x, const BigComplex& y) {
  const BigFloat denom = modulus_squared(y);
  if (denom.is_zero()) throw std::domain_error("BigComplex division by zero");
  return {(x.re * y.re + x.im * y.im) / denom, (x.im * y.re - x.re * y.im) / denom};
}

BigFloat modulus_squared(const BigComplex& z) { return z.re * z.re + z.im * z.im; }

BigComplex complex_cbrt(const BigComplex& w) {
  const mpfr_prec_t prec = std::max(w.re.precision(), w.im.precision());
  if (w.im.is_zero()) return {cbrt(w.re), BigFloat(prec)};

  // Scale w by 8^(-k) so the double seed stays in range; undo with 2^(-k)
  // on the result. mpfr exponents of zero values are meaningless, so only
  // nonzero parts vote.
  long e = mpfr_get_exp(w.im.raw());
  if (!w.re.is_zero()) e = std::max(e, mpfr_get_exp(w.re.raw()));
  long k = 0;
  if (e > 900 || e < -900) k = e / 3;
  const BigComplex ws{w.re.scaled_by_power_of_two(-3 * k), w.im.scaled_by_power_of_two(-3 * k)};

  const std::complex<double> seed =
      std::pow(std::complex<double>(ws.re.to_double(), ws.im.to_double()), 1.0 / 3.0);
  BigComplex z{BigFloat::from_double(seed.real(), prec), BigFloat::from_double(seed.imag(), prec)};

  // Newton on z^3 - ws: quadratic convergence from ~50 correct bits.
  const BigFloat two = BigFloat::from_double(2.0, prec);
  const BigFloat three = BigFloat::from_double(3.0, prec);
  const BigComplex two_c{two, BigFloat(prec)};
  const BigComplex three_c{three, BigFloat(prec)};
  for (int iter = 0; iter < 64; ++iter) {
    const BigComplex z2 = z * z;
    const BigComplex zn = (two_c * (z2 * z) + ws) / (three_c * z2);
    const BigComplex delta = zn - z;
    z = zn;
    // |delta|^2 <= |z|^2 * 2^(-2(prec-8)) terminates the loop.
    const BigFloat tolerance = modulus_squared(z).scaled_by_power_of_two(-2 * (prec - 8));
    if (modulus_squared(delta) <= tolerance) break;
  }
  return {z.re.scaled_by_power_of_two(k), z.im.scaled_by_power_of_two(k)};
}

}  // namespace radiq
