#include <gtest/gtest.h>

#include "isocert/errors.hpp"
#include "isocert/geomex/geomex.hpp"

using namespace isocert;
using namespace isocert::geomex;

namespace {

QuadNumber q(long a) { return QuadNumber(Rational(a)); }

const Clause* find_clause(const ModelReport& r, const std::string& name) {
  for (const auto& c : r.clauses)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST(QuadNumber, Arithmetic) {
  const QuadNumber s3(Rational(0), Rational(1), 3);
  EXPECT_EQ(s3 * s3, q(3));
  EXPECT_EQ(QuadNumber(Rational(0), Rational(1), 12), QuadNumber(Rational(0), Rational(2), 3));
  EXPECT_EQ((q(1) + s3).pow(2), q(4) + QuadNumber(Rational(0), Rational(2), 3));
  EXPECT_EQ(QuadNumber(Rational(1), Rational(-1), 2).sign(), -1);
  EXPECT_EQ(QuadNumber(Rational(-1), Rational(1), 2).sign(), 1);
  EXPECT_EQ(QuadNumber(Rational(0), Rational(8, 3), 3).to_string(), "8/3*sqrt(3)");
  EXPECT_EQ(QuadNumber(Rational(-1), Rational(-1), 2).to_string(), "-1-sqrt(2)");
}

TEST(QuadNumber, MinimalPolynomial) {
  const QuadNumber x(Rational(1), Rational(1), 2);
  const UPoly mp = x.minimal_polynomial();
  EXPECT_EQ(mp, UPoly({Rational(-1), Rational(-2), Rational(1)}));
  EXPECT_EQ(q(5).minimal_polynomial().degree(), 1);
}

TEST(Enclose, CertifiedNarrowInterval) {
  const auto e = enclose(QuadNumber(Rational(0), Rational(1), 2));
  EXPECT_LE(e.width(), 1e-12);
  EXPECT_LE(e.lo_d, 1.4142135623730951);
  EXPECT_GE(e.hi_d, 1.4142135623730950);
  EXPECT_EQ(e.minimal_polynomial.sign_at(e.lo) * e.minimal_polynomial.sign_at(e.hi), -1);
}

TEST(Models, EquatorialSphere) {
  const auto m = equatorial_sphere();
  EXPECT_EQ(m.S, q(0));
  EXPECT_EQ(m.A3, q(0));
  EXPECT_EQ(m.distinct(), 1);
  EXPECT_FALSE(m.okumura_equality());
}

TEST(Models, CliffordTori) {
  const QuadNumber a3(Rational(0), Rational(8, 3), 3);
  const QuadNumber expect_a3[] = {a3, q(0), -a3};
  for (int k = 1; k <= 3; ++k) {
    const auto m = clifford_torus(k);
    EXPECT_EQ(m.S, q(4)) << k;
    EXPECT_EQ(m.A3, expect_a3[k - 1]) << k;
    EXPECT_EQ(m.distinct(), 2);
    EXPECT_EQ(m.sum_h2, q(0));
    EXPECT_EQ(m.okumura_equality(), k != 2) << k;
    EXPECT_EQ(m.case2_pattern(), k != 2) << k;
    for (const auto& c : m.curvatures) EXPECT_LE(c.value.width(), 1e-12);
    for (const auto& p : m.power_sums) EXPECT_LE(p.width(), 1e-12);
  }
  const auto sp = clifford_torus(2).spectrum();
  EXPECT_EQ(sp, (std::vector<QuadNumber>{q(-1), q(-1), q(1), q(1)}));
  EXPECT_THROW(clifford_torus(0), PreconditionError);
  EXPECT_THROW(clifford_torus(4), PreconditionError);
}

TEST(Models, IsoparametricFourDistinct) {
  const auto m = isoparametric_g4();
  EXPECT_EQ(m.distinct(), 4);
  ASSERT_EQ(m.power_sums.size(), 4u);
  EXPECT_EQ(m.power_sums[0].value, q(0));
  EXPECT_EQ(m.power_sums[1].value, q(12));
  EXPECT_EQ(m.power_sums[2].value, q(0));
  EXPECT_EQ(m.power_sums[3].value, q(68));
  EXPECT_EQ(m.sum_h2, q(96));
  EXPECT_TRUE(m.okumura_bound());
  EXPECT_FALSE(m.okumura_equality());
}

TEST(Models, NegationFixesSAndNegatesA3) {
  for (const auto& name : model_names()) {
    const auto m = model_by_name(name);
    const auto n = m.negated();
    EXPECT_EQ(n.S, m.S) << name;
    EXPECT_EQ(n.A3, -m.A3) << name;
    EXPECT_EQ(n.R_M, m.R_M) << name;
    EXPECT_EQ(n.negated().spectrum(), m.spectrum()) << name;
  }
  EXPECT_THROW(model_by_name("veronese"), PreconditionError);
}

TEST(CheckModel, TheoremVerdicts) {
  EXPECT_EQ(check_model(equatorial_sphere(), 1).verdict, ModelVerdict::Consistent);
  EXPECT_EQ(check_model(clifford_torus(2), 2).verdict, ModelVerdict::Consistent);
  EXPECT_EQ(check_model(isoparametric_g4(), 3).verdict, ModelVerdict::Consistent);
  for (const auto& name : model_names())
    for (int th = 1; th <= 3; ++th)
      EXPECT_NE(check_model(model_by_name(name), th).verdict, ModelVerdict::Counterexample) << name << " " << th;
}

TEST(CheckModel, CliffordOneFlagsDiscrepancy) {
  const auto r = check_model(clifford_torus(1), 2);
  EXPECT_EQ(r.verdict, ModelVerdict::DocumentedDiscrepancy);
  EXPECT_EQ(r.anchor, "thm2");
  EXPECT_NE(r.cross_reference.find("open question"), std::string::npos);
  const Clause* c = find_clause(r, "A3_eq_0");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, ClauseStatus::Violated);
  EXPECT_LE(r.max_enclosure_width, 1e-12);
}

TEST(CheckModel, InvalidTheoremRejected) { EXPECT_THROW(check_model(equatorial_sphere(), 4), PreconditionError); }

TEST(Models, OkumuraBoundAndDeltaSConsistency) {
  for (const auto& name : model_names()) {
    const auto m = model_by_name(name);
    EXPECT_TRUE(m.okumura_bound()) << name;
    EXPECT_EQ(m.okumura_equality(), name == "clifford-torus-1" || name == "clifford-torus-3") << name;
    EXPECT_EQ(m.sum_h2, m.S * (m.S - q(4))) << name;
    if (m.S == q(0) || m.S == q(4)) EXPECT_EQ(m.sum_h2, q(0)) << name;
    EXPECT_EQ(m.power_sums[1].value, m.S) << name;
    EXPECT_EQ(m.power_sums[2].value, m.A3) << name;
  }
}
