#include "radiq/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace radiq {

Rational::Rational(const Integer& num, const Integer& den) : value_(num, den) {
  if (den == 0) throw std::domain_error("division by zero");
  value_.canonicalize();
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) throw std::domain_error("division by zero");
  return Rational(mpq_class(x.value_ / y.value_));
}

std::string Rational::to_string() const {
  return is_integer() ? value_.get_num().get_str() : value_.get_str();
}

Rational normalize_rational(const Integer& num, const Integer& den) {
  return Rational(num, den);
}

Rational parse_rational(const std::string& text) {
  const auto bad = [&] { throw std::invalid_argument("malformed rational: '" + text + "'"); };
  const auto slash = text.find('/');
  const auto check_int = [&](const std::string& part, bool allow_sign) {
    if (part.empty()) bad();
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) bad();
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) bad();
  };
  if (slash == std::string::npos) {
    check_int(text, true);
    return Rational(Integer(text, 10));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  check_int(num, true);
  check_int(den, false);
  return Rational(Integer(num, 10), Integer(den, 10));
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Rational rational_pow(const Rational& base, unsigned long exponent) {
  return Rational(integer_pow(base.numerator(), exponent),
                  integer_pow(base.denominator(), exponent));
}

std::optional<Rational> rational_cube_root(const Rational& q) {
  const auto num_root = integer_cube_root(q.numerator());
  if (!num_root) return std::nullopt;
  const auto den_root = integer_cube_root(q.denominator());
  if (!den_root) return std::nullopt;
  return Rational(*num_root, *den_root);
}

std::optional<Rational> rational_square_root(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  const auto num_root = integer_square_root(q.numerator());
  if (!num_root) return std::nullopt;
  const auto den_root = integer_square_root(q.denominator());
  if (!den_root) return std::nullopt;
  return Rational(*num_root, *den_root);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.to_string();
}

}  // namespace radiq
