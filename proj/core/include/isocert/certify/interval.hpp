#pragma once

#include <map>
#include <optional>
#include <string>

#include "isocert/exactalg/multipoly.hpp"
#include "isocert/exactalg/ratfn.hpp"

namespace isocert::certify {

using exactalg::MultiPoly;
using exactalg::Rational;
using exactalg::RatFn;

/// Closed interval of doubles.  Every operation widens its result by one ulp
/// on each side, so containment holds under round-to-nearest.
class Interval {
 public:
  Interval() = default;
  Interval(double x);  // NOLINT(google-explicit-constructor)
  Interval(double lo, double hi);

  /// Tightest double enclosure of an exact rational.
  static Interval from_rational(const Rational& q);
  static Interval hull(const Interval& a, const Interval& b);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double mid() const noexcept { return lo_ + 0.5 * (hi_ - lo_); }
  double width() const noexcept { return hi_ - lo_; }
  double mag() const noexcept;  // max |x|

  bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }
  bool contains(const Rational& q) const;
  bool contains_zero() const noexcept { return lo_ <= 0.0 && 0.0 <= hi_; }
  bool subset_of(const Interval& o) const noexcept { return o.lo_ <= lo_ && hi_ <= o.hi_; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Throws PossiblePole when the divisor contains 0.
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval operator-() const noexcept { return Interval(-hi_, -lo_, 0); }
  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }

  friend bool operator==(const Interval&, const Interval&) = default;

  std::string to_string() const;

 private:
  Interval(double lo, double hi, int) : lo_(lo), hi_(hi) {}
  double lo_ = 0.0;
  double hi_ = 0.0;
};

Interval sqr(const Interval& x);
Interval pow(const Interval& x, unsigned e);
/// Square root of x intersected with [0, inf); throws PreconditionError if x < 0 entirely.
Interval sqrt(const Interval& x);
Interval abs(const Interval& x);
std::optional<Interval> intersect(const Interval& a, const Interval& b);

/// Enclosure of a polynomial over a box; unlisted symbols that occur are an error.
Interval interval_eval(const MultiPoly& p, const std::map<std::string, Interval>& box);
/// Enclosure of a rational function; PossiblePole if the denominator enclosure meets 0.
Interval interval_eval(const RatFn& f, const std::map<std::string, Interval>& box);

/// Scalar context over gap enclosures for the printed frame formulas:
/// lam_j - lam_i = g_i + ... + g_{j-1} for i < j.
struct GapContext {
  Interval g1, g2, g3;
  Interval d(int i, int j) const;
  Interval k(long v) const { return Interval(static_cast<double>(v)); }
};

}  // namespace isocert::certify
