#include "isocert/exactalg/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "isocert/errors.hpp"

namespace isocert::exactalg {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw PreconditionError("cannot convert a non-finite double to a rational");
  return Rational(mpq_class(x));
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  // trim
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw PreconditionError("empty rational literal");
  s = s.substr(first, last - first + 1);

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const Rational n = parse(s.substr(0, slash));
    const Rational d = parse(s.substr(slash + 1));
    if (d.is_zero()) throw DivisionByZero("rational literal '" + s + "' has zero denominator");
    return n / d;
  }

  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') {
    negative = s[pos] == '-';
    ++pos;
  }
  mpz_class mantissa = 0;
  long scale = 0;
  bool any_digit = false;
  bool seen_point = false;
  for (; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa = mantissa * 10 + (c - '0');
      if (seen_point) --scale;
      any_digit = true;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw PreconditionError("malformed rational literal '" + s + "'");
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') throw PreconditionError("malformed rational literal '" + s + "'");
    ++pos;
    bool exp_negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      exp_negative = s[pos] == '-';
      ++pos;
    }
    long exponent = 0;
    bool exp_digit = false;
    for (; pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])); ++pos) {
      exponent = exponent * 10 + (s[pos] - '0');
      if (exponent > 100000) throw PreconditionError("exponent too large in '" + s + "'");
      exp_digit = true;
    }
    if (!exp_digit || pos != s.size()) throw PreconditionError("malformed rational literal '" + s + "'");
    scale += exp_negative ? -exponent : exponent;
  }
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  Rational r = scale >= 0 ? Rational(mantissa * power, 1) : Rational(mantissa, power);
  return negative ? -r : r;
}

double Rational::lower_double() const {
  const double d = value_.get_d();
  if (cmp(mpq_class(d), value_) <= 0) return d;
  return std::nextafter(d, -std::numeric_limits<double>::infinity());
}

double Rational::upper_double() const {
  const double d = value_.get_d();
  if (cmp(mpq_class(d), value_) >= 0) return d;
  return std::nextafter(d, std::numeric_limits<double>::infinity());
}

std::string Rational::to_string() const { return value_.get_str(); }

Rational Rational::pow(int e) const {
  if (e < 0) return Rational(1) / pow(-e);
  mpz_class n;
  mpz_class d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  value_ /= o.value_;
  return *this;
}

mpz_class lcm_denominators(const mpz_class& acc, const Rational& r) {
  mpz_class out;
  const mpz_class d = r.denominator();
  mpz_lcm(out.get_mpz_t(), acc.get_mpz_t(), d.get_mpz_t());
  return out;
}

}  // namespace isocert::exactalg
