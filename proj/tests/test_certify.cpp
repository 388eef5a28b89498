#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "isocert/certify/certify.hpp"
#include "isocert/errors.hpp"
#include "isocert/exactalg/ratfn.hpp"
#include "isocert/frameforms/stated.hpp"

using namespace isocert;
using namespace isocert::certify;
using exactalg::Rational;

namespace {

double value(const Certificate& c, const std::string& key) {
  for (const auto& [k, v] : c.values)
    if (k == key) return v;
  ADD_FAILURE() << "missing value " << key;
  return NAN;
}

}  // namespace

TEST(Interval, ArithmeticEnclosesSamples) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int k = 0; k < 2000; ++k) {
    double a0 = u(rng), a1 = u(rng), b0 = u(rng), b1 = u(rng);
    if (a0 > a1) std::swap(a0, a1);
    if (b0 > b1) std::swap(b0, b1);
    const Interval A(a0, a1), B(b0, b1);
    const double x = a0 + (a1 - a0) * 0.37, y = b0 + (b1 - b0) * 0.81;
    EXPECT_TRUE((A + B).contains(x + y));
    EXPECT_TRUE((A - B).contains(x - y));
    EXPECT_TRUE((A * B).contains(x * y));
    EXPECT_TRUE(sqr(A).contains(x * x));
    EXPECT_GE(sqr(A).lo(), 0.0);
    if (!B.contains_zero()) EXPECT_TRUE((A / B).contains(x / y));
  }
}

TEST(Interval, OutwardRoundingOfThirds) {
  const Interval t = Interval(1.0) / Interval(3.0);
  EXPECT_TRUE(t.contains(Rational(1, 3)));
  EXPECT_GT(t.width(), 0.0);
  EXPECT_THROW(Interval(1.0) / Interval(-1.0, 1.0), PossiblePole);
}

TEST(IntervalEval, SumOverUnitBox) {
  const auto t = exactalg::SymbolTable::make({"lam1", "lam2"});
  const auto p = exactalg::MultiPoly::variable(t, 0) + exactalg::MultiPoly::variable(t, 1);
  const Interval r = interval_eval(p, {{"lam1", Interval(0, 1)}, {"lam2", Interval(0, 1)}});
  EXPECT_EQ(r.lo(), 0.0);
  EXPECT_EQ(r.hi(), 2.0);
}

TEST(IntervalEval, PossiblePole) {
  const auto t = exactalg::SymbolTable::make({"lam1", "lam2"});
  const exactalg::RatFn f = exactalg::RatFn(exactalg::MultiPoly(t, Rational(1))) /
                            exactalg::RatFn(exactalg::MultiPoly::variable(t, 1) - exactalg::MultiPoly::variable(t, 0));
  EXPECT_THROW(interval_eval(f, {{"lam1", Interval(0, 1)}, {"lam2", Interval(0, 1)}}), PossiblePole);
}

TEST(Li, ExactValuesAtSpectrum) {
  const auto L = L_at({Rational(-3), Rational(-1), Rational(1), Rational(3)});
  for (const auto& v : L) EXPECT_EQ(v, Rational(-1));
  EXPECT_THROW(L_at({Rational(-1), Rational(-1), Rational(1), Rational(1)}), PoleError);
}

TEST(Li, ChamberPointLiesOnSlice) {
  const auto p = chamber_point(8.0, 0.7, 1.1);
  ASSERT_TRUE(p.has_value());
  double s1 = 0, s2 = 0;
  for (double x : *p) s1 += x, s2 += x * x;
  EXPECT_NEAR(s1, 0.0, 1e-12);
  EXPECT_NEAR(s2, 8.0, 1e-12);
  EXPECT_NEAR((*p)[1] - (*p)[0], 0.7, 1e-12);
  EXPECT_NEAR((*p)[3] - (*p)[2], 1.1, 1e-12);
  EXPECT_FALSE(chamber_point(8.0, 5.0, 5.0).has_value());
}

TEST(Li, CertifiedNegativeAtDefaultParameters) {
  const auto c = certify_Li_negative(8.0, 0.05, 1e-9, 20);
  EXPECT_EQ(c.status, Status::Proved) << c.note;
  EXPECT_LE(c.max_depth, 20);
  EXPECT_GE(c.margin_achieved, 1e-9);
}

TEST(Li, ZeroCollarRejected) { EXPECT_THROW(certify_Li_negative(8.0, 0.0), PreconditionError); }

TEST(Li, RandomCrossCheckFindsNoViolation) {
  const auto cc = li_cross_check(8.0, 0.05, 100000, 20240229);
  EXPECT_EQ(cc.feasible, 100000u);
  EXPECT_GE(cc.drawn, cc.feasible);
  EXPECT_EQ(cc.violations, 0u);
}

TEST(Li, ThreadCountDoesNotChangeCertificate) {
  const auto a = certify_Li_negative(6.0, 0.1, 1e-9, 20, 1);
  const auto b = certify_Li_negative(6.0, 0.1, 1e-9, 20, 3);
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.cells_processed, b.cells_processed);
  EXPECT_EQ(a.margin_achieved, b.margin_achieved);
}

TEST(Okumura, ProvedWithEqualityConstant) {
  const auto c = certify_okumura(4, 1e-6);
  EXPECT_EQ(c.status, Status::Proved) << c.note;
  EXPECT_NEAR(value(c, "equality_constant"), 1.0 / std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(value(c, "equality_constant"), 0.577350, 1e-6);
  EXPECT_LE(value(c, "max_low_slack_distance"), 1e-3);
}

TEST(Okumura, InequalityOnRandomZeroSumVectors) {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> nd;
  const double c2 = 1.0 / 3.0;
  for (int k = 0; k < 100000; ++k) {
    double a[4], m = 0;
    for (double& x : a) m += (x = nd(rng));
    m /= 4;
    double s2 = 0, s3 = 0;
    for (double& x : a) {
      x -= m;
      s2 += x * x;
      s3 += x * x * x;
    }
    EXPECT_LE(s3 * s3, c2 * s2 * s2 * s2 * (1 + 1e-12));
  }
}

TEST(Band, QuantityList) {
  const auto& q = band_quantities();
  EXPECT_EQ(q.size(), 14u);
  EXPECT_NE(std::find(q.begin(), q.end(), "B1g"), q.end());
  EXPECT_NE(std::find(q.begin(), q.end(), "G3f"), q.end());
}

TEST(Band, AllQuantitiesProvedAtPipelineParameters) {
  for (const auto& q : band_quantities()) {
    BandOptions o;
    o.a3 = 1.0;
    const auto c = certify_band_bounds(q, 8.0, 0.1, 0.05, o);
    EXPECT_EQ(c.status, Status::Proved) << q << ": " << c.note;
    if (q[0] != 'B') EXPECT_TRUE(std::isfinite(value(c, "C"))) << q;
  }
}

TEST(Band, EmptyBandTriviallyProved) {
  const auto c = certify_band_bounds("m0", 0.0, 0.1, 0.05);
  EXPECT_EQ(c.status, Status::Proved);
  EXPECT_FALSE(c.note.empty());
}

TEST(Band, UnknownQuantityRejected) { EXPECT_THROW(certify_band_bounds("G5g", 8.0, 0.1, 0.05), PreconditionError); }

TEST(IntervalEval, ContainmentOnRandomBoxes) {
  const auto t = exactalg::SymbolTable::make({"x", "y"});
  const auto x = exactalg::MultiPoly::variable(t, 0), y = exactalg::MultiPoly::variable(t, 1);
  const auto p = x.pow(3) * y - Rational(7, 3) * x * y.pow(2) + Rational(1, 5) * y.pow(4) - exactalg::MultiPoly(t, Rational(2));
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> num(-300, 300);
  for (int k = 0; k < 3000; ++k) {
    const Rational px(num(rng), 97), py(num(rng), 89);
    const double w = 1e-3 * (k % 50 + 1);
    const Interval bx(px.lower_double() - w, px.upper_double() + w * 0.5);
    const Interval by(py.lower_double() - w * 0.25, py.upper_double() + w);
    const Interval r = interval_eval(p, {{"x", bx}, {"y", by}});
    EXPECT_TRUE(r.contains(p.evaluate(std::vector<Rational>{px, py})));
  }
}

TEST(IntervalEval, RefinementNeverWidens) {
  const auto t = exactalg::SymbolTable::make({"x", "y"});
  const auto x = exactalg::MultiPoly::variable(t, 0), y = exactalg::MultiPoly::variable(t, 1);
  const auto p = x * x * y - Rational(3) * x * y + y.pow(3);
  const Interval X(-1.0, 2.0), Y(0.5, 1.5);
  const Interval whole = interval_eval(p, {{"x", X}, {"y", Y}});
  for (int depth = 1; depth <= 5; ++depth) {
    const int n = 1 << depth;
    double lo = INFINITY, hi = -INFINITY;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Interval cx(X.lo() + X.width() * i / n, X.lo() + X.width() * (i + 1) / n);
        const Interval cy(Y.lo() + Y.width() * j / n, Y.lo() + Y.width() * (j + 1) / n);
        const Interval r = interval_eval(p, {{"x", cx}, {"y", cy}});
        lo = std::min(lo, r.lo());
        hi = std::max(hi, r.hi());
      }
    }
    EXPECT_GE(lo, whole.lo()) << depth;
    EXPECT_LE(hi, whole.hi()) << depth;
  }
}

TEST(Li, PrintedPolynomialEnclosureNearSpectrum) {
  // gaps of (-3,-1,1,3) widened by 1e-9: the enclosure of gamma L_i must contain -256
  const double e = 1e-9;
  const Interval g(2.0 - e, 2.0 + e);
  const GapContext c{g, g, g};
  for (int i = 1; i <= 4; ++i) {
    const Interval v = frameforms::stated::gamma_L(c, i);
    EXPECT_TRUE(v.contains(-256.0)) << i;
    EXPECT_LT(v.width(), 1e-5) << i;
  }
}
