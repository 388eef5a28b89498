#include <gtest/gtest.h>

#include <random>
#include <set>

#include "isocert/errors.hpp"
#include "isocert/exactalg/ratfn.hpp"
#include "isocert/exactalg/upoly.hpp"

using namespace isocert;
using namespace isocert::exactalg;

namespace {

SymbolTablePtr lam_table() { return SymbolTable::make({"lam1", "lam2", "lam3", "lam4"}); }

MultiPoly lam(const SymbolTablePtr& t, int i) { return MultiPoly::variable(t, i - 1); }

MultiPoly random_poly(const SymbolTablePtr& t, std::mt19937_64& rng, int terms, int max_deg) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<Term> out;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    for (std::size_t v = 0; v < t->size(); ++v) m.set(v, static_cast<unsigned>(deg(rng)));
    out.push_back({m, Rational(coef(rng))});
  }
  return MultiPoly::from_terms(t, std::move(out));
}

}  // namespace

TEST(Rational, NormalFormAndParse) {
  EXPECT_EQ(Rational(6, 4).to_string(), "3/2");
  EXPECT_EQ(Rational(mpz_class(3), mpz_class(-6)), Rational(-1) / Rational(2));
  EXPECT_EQ(Rational::parse("-3/4"), Rational(-3) / Rational(4));
  EXPECT_EQ(Rational::parse("0.05"), Rational(1) / Rational(20));
  EXPECT_EQ(Rational::parse("2.5E+3"), Rational(2500));
  EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
}

TEST(Rational, DirectedDoubles) {
  const Rational third = Rational(1) / Rational(3);
  EXPECT_LT(third.lower_double(), third.upper_double());
  EXPECT_LE(Rational::from_double(third.lower_double()), third);
  EXPECT_GE(Rational::from_double(third.upper_double()), third);
  EXPECT_EQ(Rational(5).lower_double(), 5.0);
  EXPECT_EQ(Rational(5).upper_double(), 5.0);
}

TEST(MultiPoly, AdditiveInverseCancels) {
  const auto t = lam_table();
  EXPECT_TRUE(((lam(t, 1) + lam(t, 2)) + (-lam(t, 1) - lam(t, 2))).is_zero());
}

TEST(MultiPoly, DifferenceOfSquares) {
  const auto t = lam_table();
  EXPECT_EQ((lam(t, 2) - lam(t, 1)) * (lam(t, 2) + lam(t, 1)), lam(t, 2).pow(2) - lam(t, 1).pow(2));
}

TEST(MultiPoly, TableMismatchIsAnError) {
  const auto a = lam_table();
  const auto b = SymbolTable::make({"x", "y"});
  EXPECT_THROW(MultiPoly::variable(a, 0) + MultiPoly::variable(b, 0), SymbolTableMismatch);
}

TEST(MultiPoly, RingAxiomsOnRandomPolynomials) {
  const auto t = SymbolTable::make({"x", "y", "z"});
  std::mt19937_64 rng(7);
  for (int round = 0; round < 40; ++round) {
    const auto a = random_poly(t, rng, 4, 3);
    const auto b = random_poly(t, rng, 4, 3);
    const auto c = random_poly(t, rng, 3, 2);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    if (!b.is_zero()) {
      const auto q = (a * b).divide_exact(b);
      ASSERT_TRUE(q.has_value());
      EXPECT_EQ(*q, a);
    }
    std::vector<Rational> pt{Rational(round % 5 - 2), Rational(1, 3), Rational(-7, 2)};
    EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
  }
}

TEST(MultiPoly, GcdRecoversCommonFactor) {
  const auto t = SymbolTable::make({"x", "y", "z"});
  std::mt19937_64 rng(11);
  for (int round = 0; round < 15; ++round) {
    const auto g = random_poly(t, rng, 3, 2);
    const auto a = random_poly(t, rng, 3, 2);
    const auto b = random_poly(t, rng, 3, 2);
    if (g.is_constant() || a.is_zero() || b.is_zero()) continue;
    const auto d = gcd(g * a, g * b);
    EXPECT_TRUE((g * a).divide_exact(d).has_value());
    EXPECT_TRUE((g * b).divide_exact(d).has_value());
    EXPECT_TRUE(d.divide_exact(g.primitive()).has_value());
  }
}

TEST(MultiPoly, ResultantDetectsCommonRoot) {
  const auto t = SymbolTable::make({"x", "y"});
  const auto x = MultiPoly::variable(t, 0);
  const auto y = MultiPoly::variable(t, 1);
  // x^2 + y^2 - 1 and x - y share a root exactly when 2 y^2 = 1
  const auto r = resultant(x * x + y * y - MultiPoly(t, Rational(1)), x - y, 0);
  EXPECT_EQ(r.primitive(), (MultiPoly(t, Rational(2)) * y * y - MultiPoly(t, Rational(1))).primitive());
}

TEST(RatFn, ReduceCancelsCommonFactor) {
  const auto t = lam_table();
  const auto r = RatFn::reduce(lam(t, 2).pow(2) - lam(t, 1).pow(2), lam(t, 2) - lam(t, 1));
  EXPECT_TRUE(r.is_polynomial());
  EXPECT_EQ(r, RatFn(lam(t, 2) + lam(t, 1)));
}

TEST(RatFn, ZeroNumeratorNormalizes) {
  const auto t = lam_table();
  const auto r = RatFn::reduce(MultiPoly(t), lam(t, 3) - lam(t, 2));
  EXPECT_TRUE(r.is_zero());
  EXPECT_TRUE(r.den().is_constant());
  EXPECT_EQ(r.den().constant_value(), Rational(1));
}

TEST(RatFn, ZeroDenominatorRejected) {
  const auto t = lam_table();
  EXPECT_THROW(RatFn::reduce(lam(t, 1), MultiPoly(t)), DivisionByZero);
}

TEST(RatFn, EvaluateAtSpectrum) {
  const auto t = lam_table();
  const std::map<std::string, Rational> pt{
      {"lam1", Rational(-3)}, {"lam2", Rational(-1)}, {"lam3", Rational(1)}, {"lam4", Rational(3)}};
  RatFn sum(t), sq(t);
  for (int i = 1; i <= 4; ++i) {
    sum += RatFn(lam(t, i));
    sq += RatFn(lam(t, i).pow(2));
  }
  EXPECT_EQ(sum.evaluate(pt), Rational(0));
  EXPECT_EQ(sq.evaluate(pt), Rational(20));
}

TEST(RatFn, PoleAndUnboundErrors) {
  const auto t = lam_table();
  const auto f = RatFn(MultiPoly(t, Rational(1))) / RatFn(lam(t, 2) - lam(t, 1));
  try {
    f.evaluate(std::map<std::string, Rational>{{"lam1", Rational(0)}, {"lam2", Rational(0)}});
    FAIL() << "expected a pole";
  } catch (const PoleError& e) {
    EXPECT_FALSE(e.factor().empty());
  }
  EXPECT_THROW(f.evaluate(std::map<std::string, Rational>{{"lam1", Rational(0)}}), UnboundSymbol);
}

TEST(RatFn, FieldPropertiesOnRandomFractions) {
  const auto t = SymbolTable::make({"x", "y"});
  std::mt19937_64 rng(3);
  for (int round = 0; round < 20; ++round) {
    const auto a = random_poly(t, rng, 3, 2), b = random_poly(t, rng, 3, 2);
    const auto c = random_poly(t, rng, 3, 2), d = random_poly(t, rng, 3, 2);
    if (b.is_zero() || d.is_zero() || c.is_zero()) continue;
    const auto f = RatFn::reduce(a, b), g = RatFn::reduce(c, d);
    EXPECT_EQ((f + g) - g, f);
    EXPECT_EQ((f * g) / g, f);
    EXPECT_EQ(f.derivative(0) * RatFn(MultiPoly(t, Rational(2))), (f + f).derivative(0));
  }
}

TEST(UPoly, SturmCountsAndIsolation) {
  const UPoly p({Rational(-2), Rational(0), Rational(1)});
  const auto roots = isolate_real_roots(p, Rational(1, 1000000));
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_NEAR(roots[0].lo.to_double(), -1.414214, 1e-6);
  EXPECT_NEAR(roots[1].hi.to_double(), 1.414214, 1e-6);
  EXPECT_LE(roots[1].hi - roots[1].lo, Rational(1, 1000000));
  EXPECT_EQ(count_roots(sturm_chain(p), Rational(-2), Rational(2)), 2);
  EXPECT_EQ(count_roots(sturm_chain(p), Rational(0), Rational(2)), 1);
}

TEST(UPoly, NoRealRoots) {
  EXPECT_TRUE(isolate_real_roots(UPoly({Rational(1), 0, 0, 0, Rational(1)}), Rational(1, 1000)).empty());
}

TEST(UPoly, MultiplicityFromSquarefreeDecomposition) {
  const UPoly xm1({Rational(-1), Rational(1)});
  const UPoly xp1({Rational(1), Rational(1)});
  const auto roots = isolate_real_roots(xm1 * xm1 * xp1, Rational(1, 1000));
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_TRUE(roots[0].lo <= Rational(-1) && Rational(-1) <= roots[0].hi);
  EXPECT_EQ(roots[0].multiplicity, 1u);
  EXPECT_TRUE(roots[1].lo <= Rational(1) && Rational(1) <= roots[1].hi);
  EXPECT_EQ(roots[1].multiplicity, 2u);
}

TEST(UPoly, ZeroPolynomialRejected) { EXPECT_THROW(isolate_real_roots(UPoly(), Rational(1, 10)), Error); }

TEST(UPoly, IsolationOnRandomProductsOfLinearFactors) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> r(-20, 20);
  for (int round = 0; round < 25; ++round) {
    std::set<int> want;
    UPoly p = UPoly::constant(Rational(1));
    for (int k = 0; k < 5; ++k) {
      const int root = r(rng);
      want.insert(root);
      p = p * UPoly({Rational(-root, 1) * Rational(1, 3), Rational(1)});
    }
    const auto roots = isolate_real_roots(p, Rational(1, 1 << 20));
    ASSERT_EQ(roots.size(), want.size());
    auto it = want.begin();
    for (const auto& iv : roots) {
      const Rational exact = Rational(*it++, 3);
      EXPECT_TRUE(iv.lo <= exact && exact <= iv.hi);
      EXPECT_EQ(sign_at_root(squarefree_part(p), iv, UPoly::x() - UPoly::constant(exact)), 0);
    }
  }
}

TEST(UPoly, SignAtIrrationalRoot) {
  const UPoly p({Rational(-2), Rational(0), Rational(1)});
  const auto roots = isolate_real_roots(p, Rational(1, 100));
  // x - 7/5 is positive at sqrt(2), x - 3/2 negative
  EXPECT_EQ(sign_at_root(p, roots[1], UPoly({Rational(-7, 5), Rational(1)})), 1);
  EXPECT_EQ(sign_at_root(p, roots[1], UPoly({Rational(-3, 2), Rational(1)})), -1);
}

TEST(RatFn, CanonicalFormIndependentOfConstruction) {
  const auto t = lam_table();
  const RatFn one(t, Rational(1));
  const RatFn a = one / (RatFn(lam(t, 1)) - RatFn(lam(t, 2))) - one / (RatFn(lam(t, 1)) - RatFn(lam(t, 3)));
  const RatFn b = RatFn::reduce(lam(t, 2) - lam(t, 3), (lam(t, 1) - lam(t, 2)) * (lam(t, 1) - lam(t, 3)));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.num(), b.num());
  EXPECT_EQ(a.den(), b.den());
}

TEST(RatFn, EvaluationCommutesWithArithmetic) {
  const auto t = SymbolTable::make({"x", "y", "z"});
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> pick(-9, 9);
  int checked = 0;
  for (int round = 0; round < 60; ++round) {
    const auto df = random_poly(t, rng, 2, 1) + MultiPoly(t, Rational(1));
    const auto dg = random_poly(t, rng, 2, 1) + MultiPoly(t, Rational(2));
    if (df.is_zero() || dg.is_zero()) continue;
    const auto f = RatFn::reduce(random_poly(t, rng, 3, 2), df);
    const auto g = RatFn::reduce(random_poly(t, rng, 3, 2), dg);
    const std::vector<Rational> pt{Rational(pick(rng), 7), Rational(pick(rng), 5), Rational(pick(rng), 3)};
    Rational fv, gv;
    try {
      fv = f.evaluate(pt);
      gv = g.evaluate(pt);
    } catch (const PoleError&) {
      continue;
    }
    EXPECT_EQ((f + g).evaluate(pt), fv + gv);
    EXPECT_EQ((f - g).evaluate(pt), fv - gv);
    EXPECT_EQ((f * g).evaluate(pt), fv * gv);
    if (!g.is_zero() && !gv.is_zero()) EXPECT_EQ((f / g).evaluate(pt), fv / gv);
    ++checked;
  }
  EXPECT_GT(checked, 30);
}
