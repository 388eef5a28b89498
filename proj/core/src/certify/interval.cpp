#include "isocert/certify/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "isocert/errors.hpp"

namespace isocert::certify {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double x) { return std::nextafter(x, -kInf); }
double up(double x) { return std::nextafter(x, kInf); }

Interval widened(double lo, double hi) { return Interval(down(lo), up(hi)); }

// Directed sums and products: the rounding error is recovered exactly (TwoSum,
// fma) so exact results are not widened.
double add_down(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) return down(s);
  const double bb = s - a;
  const double e = (a - (s - bb)) + (b - bb);
  return e < 0.0 ? down(s) : s;
}

double add_up(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) return up(s);
  const double bb = s - a;
  const double e = (a - (s - bb)) + (b - bb);
  return e > 0.0 ? up(s) : s;
}

// Below this magnitude the fma residual may underflow, so rounding is assumed.
constexpr double kTiny = 1e-290;

double mul_down(double a, double b) {
  const double p = a * b;
  if (!std::isfinite(p) || (p != 0.0 && std::fabs(p) < kTiny)) return down(p);
  if (p == 0.0) return (a == 0.0 || b == 0.0) ? 0.0 : down(p);
  return std::fma(a, b, -p) < 0.0 ? down(p) : p;
}

double mul_up(double a, double b) {
  const double p = a * b;
  if (!std::isfinite(p) || (p != 0.0 && std::fabs(p) < kTiny)) return up(p);
  if (p == 0.0) return (a == 0.0 || b == 0.0) ? 0.0 : up(p);
  return std::fma(a, b, -p) > 0.0 ? up(p) : p;
}

}  // namespace

Interval::Interval(double x) : lo_(x), hi_(x) {
  if (std::isnan(x)) throw PreconditionError("interval endpoint is NaN");
}

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi) throw PreconditionError("interval needs lo <= hi");
}

Interval Interval::from_rational(const Rational& q) { return Interval(q.lower_double(), q.upper_double()); }

Interval Interval::hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
}

double Interval::mag() const noexcept { return std::max(std::fabs(lo_), std::fabs(hi_)); }

bool Interval::contains(const Rational& q) const {
  return Rational::from_double(lo_) <= q && q <= Rational::from_double(hi_);
}

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(add_down(a.lo_, b.lo_), add_up(a.hi_, b.hi_), 0);
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval(add_down(a.lo_, -b.hi_), add_up(a.hi_, -b.lo_), 0);
}

Interval operator*(const Interval& a, const Interval& b) {
  const double x[2] = {a.lo_, a.hi_};
  const double y[2] = {b.lo_, b.hi_};
  double lo = kInf;
  double hi = -kInf;
  for (double u : x) {
    for (double v : y) {
      lo = std::min(lo, mul_down(u, v));
      hi = std::max(hi, mul_up(u, v));
    }
  }
  return Interval(lo, hi, 0);
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw PossiblePole();
  const double p[4] = {a.lo_ / b.lo_, a.lo_ / b.hi_, a.hi_ / b.lo_, a.hi_ / b.hi_};
  return widened(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
}

std::string Interval::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << '[' << lo_ << ", " << hi_ << ']';
  return os.str();
}

Interval sqr(const Interval& x) {
  const double m = std::max(mul_up(x.lo(), x.lo()), mul_up(x.hi(), x.hi()));
  if (x.contains_zero()) return Interval(0.0, m);
  const double n = std::min(std::fabs(x.lo()), std::fabs(x.hi()));
  return Interval(std::max(0.0, mul_down(n, n)), m);
}

Interval pow(const Interval& x, unsigned e) {
  if (e == 0) return Interval(1.0);
  if (e == 1) return x;
  if (e % 2 == 0) return pow(sqr(x), e / 2);
  // odd powers are monotone; std::pow is within a few ulps, widen by e+1 steps
  double lo = std::pow(x.lo(), static_cast<double>(e));
  double hi = std::pow(x.hi(), static_cast<double>(e));
  for (unsigned k = 0; k <= e; ++k) {
    lo = down(lo);
    hi = up(hi);
  }
  return Interval(lo, hi);
}

Interval sqrt(const Interval& x) {
  if (x.hi() < 0.0) throw PreconditionError("square root of a negative interval");
  const double lo = x.lo() <= 0.0 ? 0.0 : std::max(0.0, down(std::sqrt(x.lo())));
  return Interval(lo, up(std::sqrt(x.hi())));
}

Interval abs(const Interval& x) {
  if (x.lo() >= 0.0) return x;
  if (x.hi() <= 0.0) return -x;
  return Interval(0.0, x.mag());
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  const double lo = std::max(a.lo(), b.lo());
  const double hi = std::min(a.hi(), b.hi());
  if (lo > hi) return std::nullopt;
  return Interval(lo, hi);
}

Interval interval_eval(const MultiPoly& p, const std::map<std::string, Interval>& box) {
  const auto& table = *p.table();
  std::vector<std::optional<Interval>> vals(table.size());
  const std::uint32_t used = p.variable_mask();
  for (std::size_t v = 0; v < table.size(); ++v) {
    if (!((used >> v) & 1u)) continue;
    auto it = box.find(table.name(v));
    if (it == box.end()) throw UnboundSymbol(table.name(v));
    vals[v] = it->second;
  }
  Interval acc(0.0);
  for (const auto& t : p.terms()) {
    Interval term = Interval::from_rational(t.coef);
    for (std::size_t v = 0; v < table.size(); ++v) {
      if (t.mono[v] != 0) term = term * pow(*vals[v], t.mono[v]);
    }
    acc = acc + term;
  }
  return acc;
}

Interval interval_eval(const RatFn& f, const std::map<std::string, Interval>& box) {
  const Interval den = interval_eval(f.den(), box);
  if (den.contains_zero()) throw PossiblePole();
  return interval_eval(f.num(), box) / den;
}

Interval GapContext::d(int i, int j) const {
  if (i == j) return Interval(0.0);
  if (i < j) return -d(j, i);
  const Interval g[3] = {g1, g2, g3};
  Interval s = g[j - 1];
  for (int k = j; k < i - 1; ++k) s = s + g[k];
  return s;
}

}  // namespace isocert::certify
