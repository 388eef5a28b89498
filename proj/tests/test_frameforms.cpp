#include <gtest/gtest.h>

#include <array>

#include "isocert/errors.hpp"
#include "isocert/frameforms/identities.hpp"
#include "isocert/frameforms/stated.hpp"

using namespace isocert;
using namespace isocert::frameforms;
using exactalg::frame_symbols;
using exactalg::h_name;
using exactalg::lambda_name;

namespace {

MultiPoly sym(const std::string& name) { return MultiPoly::variable(frame_symbols(), name); }
RatFn lam(int i) { return RatFn(sym(lambda_name(i))); }

std::map<std::string, Rational> spectrum_point() {
  return {{lambda_name(1), Rational(-3)}, {lambda_name(2), Rational(-1)}, {lambda_name(3), Rational(1)},
          {lambda_name(4), Rational(3)}};
}

const RatFn* find_extracted(const IdentityReport& r, const std::string& name) {
  for (const auto& [n, f] : r.extracted)
    if (n == name) return &f;
  return nullptr;
}

}  // namespace

TEST(ConnectionForm, Antisymmetric) {
  EXPECT_TRUE((connection_form(1, 2) + connection_form(2, 1)).is_zero());
  EXPECT_TRUE((connection_form(2, 4) + connection_form(4, 2)).is_zero());
}

TEST(ConnectionForm, CoefficientOfOmega3) {
  const RatFn want = RatFn(sym(h_name(1, 2, 3))) / (lam(1) - lam(2));
  EXPECT_EQ(connection_form(1, 2).coefficient(0b0100), want);
}

TEST(ConnectionForm, EvaluatedCoefficient) {
  auto pt = spectrum_point();
  pt[h_name(3, 4, 4)] = Rational(1);
  EXPECT_EQ(connection_form(3, 4).coefficient(0b1000).evaluate(pt), Rational(-1, 2));
}

TEST(ConnectionForm, DiagonalIndexRejected) { EXPECT_THROW(connection_form(2, 2), PreconditionError); }

TEST(GaussComponent, DiagonalCase) {
  const RatFn one(frame_symbols(), Rational(1));
  EXPECT_EQ(gauss_component(1, 2, 1, 2), one + lam(1) * lam(2));
  EXPECT_EQ(gauss_component(1, 2, 2, 1), -(one + lam(1) * lam(2)));
  EXPECT_TRUE(gauss_component(1, 2, 3, 4).is_zero());
}

TEST(DiagonalRelations, PowerSumDerivativesVanish) {
  for (int i = 1; i <= 4; ++i) {
    const auto r = diagonal_derivative_relations(i);
    const RatFn h44(sym(h_name(4, 4, i)));
    const RatFn sum = r.h11i() + r.h22i() + r.h33i() + h44;
    EXPECT_TRUE(sum.is_zero()) << "i=" << i;
    const RatFn weighted =
        lam(1) * lam(1) * r.h11i() + lam(2) * lam(2) * r.h22i() + lam(3) * lam(3) * r.h33i() + lam(4) * lam(4) * h44;
    EXPECT_TRUE(weighted.is_zero()) << "i=" << i;
  }
}

TEST(ScalarDifferential, ConstantScalarsHaveZeroDifferential) {
  MultiPoly S(frame_symbols());
  for (int i = 1; i <= 4; ++i) S += sym(lambda_name(i)).pow(2);
  EXPECT_TRUE(scalar_differential(S).is_zero());
  MultiPoly p1(frame_symbols());
  for (int i = 1; i <= 4; ++i) p1 += sym(lambda_name(i));
  EXPECT_TRUE(scalar_differential(p1).is_zero());
}

TEST(ExteriorDerivative, TopDegreeIsClosed) {
  const auto t = frame_symbols();
  FormExpr vol = FormExpr::word(t, {{1, 0}, {2, 0}, {3, 0}, {4, 0}});
  EXPECT_TRUE(exterior_derivative(vol).is_zero());
}

class IdentitySuite : public ::testing::TestWithParam<CurvatureMode> {};

TEST_P(IdentitySuite, AllPassWithZeroResidual) {
  const auto reports = verify_all(GetParam());
  ASSERT_EQ(reports.size(), identity_names().size());
  for (const auto& r : reports) {
    EXPECT_TRUE(r.pass) << r.name;
    EXPECT_TRUE(r.residual.is_zero()) << r.name << ": " << r.residual.to_string();
    for (const auto& [check, ok] : r.checks) EXPECT_TRUE(ok) << r.name << " / " << check;
  }
}

INSTANTIATE_TEST_SUITE_P(Modes, IdentitySuite, ::testing::Values(CurvatureMode::Symbolic, CurvatureMode::Expanded));

TEST(Identities, ThreadedRunMatchesSerial) {
  const auto a = verify_all(CurvatureMode::Symbolic, 1);
  const auto b = verify_all(CurvatureMode::Symbolic, 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].name, b[k].name);
    EXPECT_EQ(a[k].engine, b[k].engine);
  }
}

TEST(Identities, UnknownNameRejected) { EXPECT_THROW(verify_identity("dtheta11"), Error); }

TEST(Identities, ExtractedLiAtSpectrum) {
  const auto r = verify_identity("dPhi");
  for (int i = 1; i <= 4; ++i) {
    const RatFn* L = find_extracted(r, "L" + std::to_string(i));
    ASSERT_NE(L, nullptr);
    EXPECT_EQ(L->evaluate(spectrum_point()), Rational(-1)) << "L" << i;
  }
}

// A permuted printed formula must be caught: comparing the engine's L2
// against the printed gamma*L1 leaves a nonzero residual.
TEST(Identities, MutatedFormulaIsDetected) {
  const auto r = verify_identity("dPhi");
  const RatFn* L2 = find_extracted(r, "L2");
  ASSERT_NE(L2, nullptr);
  const FrameEngine eng;
  const auto ctx = eng.context();
  const RatFn wrong = (stated::gamma_L(ctx, 1) / stated::gamma(ctx)).to_ratfn();
  EXPECT_FALSE((*L2 - wrong).is_zero());
  const RatFn right = (stated::gamma_L(ctx, 2) / stated::gamma(ctx)).to_ratfn();
  EXPECT_TRUE((*L2 - right).is_zero());
}

TEST(Identities, IsoparametricSpecialization) {
  const auto r = verify_identity("dPhi", CurvatureMode::Expanded);
  std::map<std::string, Rational> pt = spectrum_point();
  for (const auto& name : frame_symbols()->names())
    if (name[0] == 'h') pt[name] = Rational(0);
  // R_M = 2 sum (1 + lam_i lam_j) = 12 + (p1^2 - p2) = 12 - 20 at (-3,-1,1,3)
  EXPECT_EQ(r.engine.evaluate(pt), Rational(4));
}

namespace {

// Exact scalar context at a fixed spectrum; h and R are not used by the band coefficients.
struct PointContext {
  std::array<Rational, 4> lam;
  Rational d(int i, int j) const { return lam[i - 1] - lam[j - 1]; }
  Rational h(int, int, int) const { return Rational(0); }
  Rational R(int i, int j) const { return Rational(1) + lam[i - 1] * lam[j - 1]; }
  Rational k(long v) const { return Rational(v); }
};

}  // namespace

TEST(Stated, BandCoefficientsAtSpectrum) {
  const PointContext c{{Rational(-3), Rational(-1), Rational(1), Rational(3)}};
  EXPECT_EQ(stated::m0(c), Rational(16));
  // -16 * 2 * 6 / (2 * 4)
  EXPECT_EQ(stated::B_g(c, 1), Rational(-24));
  EXPECT_EQ(c.d(4, 3) * c.d(4, 2) * c.d(4, 1), Rational(48));
  EXPECT_EQ(stated::gamma(c), Rational(256));
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(stated::gamma_L(c, i), Rational(-256));
}

namespace {

DiffForm one_form(const std::vector<std::pair<WedgeMask, RatFn>>& terms) {
  DiffForm f(frame_symbols(), 1);
  for (const auto& [m, c] : terms) f.add(m, c);
  return f;
}

bool same(const DiffForm& a, const DiffForm& b) { return (a - b).is_zero(); }

}  // namespace

TEST(Wedge, AlgebraLaws) {
  const DiffForm a = connection_form(1, 2);
  const DiffForm b = one_form({{0b0001, lam(3)}, {0b0100, lam(1) * lam(2)}});
  const DiffForm c = connection_form(3, 4) + one_form({{0b1000, lam(2) - lam(4)}});
  EXPECT_TRUE(same(wedge(a, b), wedge(b, a).scaled(RatFn(frame_symbols(), Rational(-1)))));
  EXPECT_TRUE(wedge(b, b).is_zero());
  EXPECT_TRUE(same(wedge(wedge(a, b), c), wedge(a, wedge(b, c))));
  EXPECT_TRUE(same(wedge(a + b, c), wedge(a, c) + wedge(b, c)));
  const RatFn s = lam(1) - lam(4);
  EXPECT_TRUE(same(wedge(a.scaled(s), c), wedge(a, c).scaled(s)));
}

// d(a ^ b) = da ^ b + (-1)^deg(a) a ^ db on products of generators with lambda coefficients.
TEST(ExteriorDerivative, AntiDerivationLaw) {
  const FrameEngine eng;
  const auto t = eng.table();
  const auto x = [&](int i) { return GapFraction(MultiPoly::variable(t, lambda_name(i))); };
  const std::vector<FormExpr> pieces{
      FormExpr::omega(t, 1).scaled(x(2)),
      FormExpr::connection(t, 1, 3),
      FormExpr::connection(t, 2, 4).scaled(x(1) * x(3)),
      FormExpr::omega(t, 4),
      FormExpr::scalar(GapFraction::difference(t, 3, 2, -1)),
      FormExpr::connection(t, 3, 4).scaled(GapFraction::difference(t, 1, 2)),
  };
  int checked = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = 0; j < pieces.size(); ++j) {
      const FormExpr& a = pieces[i];
      const FormExpr& b = pieces[j];
      if (a.degree() + b.degree() >= 4) continue;
      const FrameForm lhs = eng.exterior_derivative(wedge(a, b));
      FrameForm rhs = wedge(eng.exterior_derivative(a), eng.expand(b));
      const FrameForm second = wedge(eng.expand(a), eng.exterior_derivative(b));
      if (a.degree() % 2 == 0) rhs += second;
      else rhs -= second;
      EXPECT_TRUE(to_diffform(lhs - rhs).is_zero()) << i << "," << j;
      ++checked;
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(DiagonalRelations, FirstMomentVanishes) {
  for (int i = 1; i <= 4; ++i) {
    const auto r = diagonal_derivative_relations(i);
    const RatFn h44(sym(h_name(4, 4, i)));
    EXPECT_TRUE((lam(1) * r.h11i() + lam(2) * r.h22i() + lam(3) * r.h33i() + lam(4) * h44).is_zero()) << i;
  }
}

TEST(Stated, GammaTimesExtractedLiMatchesPrinted) {
  const auto r = verify_identity("dPhi");
  const FrameEngine eng;
  const auto ctx = eng.context();
  const RatFn gamma = stated::gamma(ctx).to_ratfn();
  for (int i = 1; i <= 4; ++i) {
    const RatFn* L = find_extracted(r, "L" + std::to_string(i));
    ASSERT_NE(L, nullptr);
    EXPECT_EQ(*L * gamma, stated::gamma_L(ctx, i).to_ratfn()) << i;
  }
}
