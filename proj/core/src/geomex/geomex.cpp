#include "isocert/geomex/geomex.hpp"

#include <algorithm>

#include "isocert/errors.hpp"

namespace isocert::geomex {

namespace {

long check_field(const QuadNumber& x, const QuadNumber& y) {
  if (x.is_rational()) return y.m();
  if (y.is_rational() || x.m() == y.m()) return x.m();
  throw PreconditionError("quadratic numbers from different fields");
}

std::string show(const QuadNumber& x) { return x.to_string(); }

int compare(const QuadNumber& x, const QuadNumber& y) { return (x - y).sign(); }

ModelHypersurface make_model(std::string name, Family family, std::vector<std::pair<QuadNumber, int>> spec) {
  std::sort(spec.begin(), spec.end(), [](const auto& u, const auto& v) { return compare(u.first, v.first) < 0; });
  ModelHypersurface m;
  m.name = std::move(name);
  m.family = family;
  int total = 0;
  for (const auto& [v, mult] : spec) {
    m.curvatures.push_back(PrincipalCurvature{enclose(v), mult});
    total += mult;
  }
  if (total != 4) throw PreconditionError("a hypersurface of S^5 has four principal curvatures");
  for (unsigned k = 1; k <= 4; ++k) {
    QuadNumber p;
    for (const auto& [v, mult] : spec) p = p + v.pow(k) * QuadNumber(Rational(mult));
    m.power_sums.push_back(enclose(p));
  }
  m.S = m.power_sums[1].value;
  m.A3 = m.power_sums[2].value;
  m.R_M = QuadNumber(Rational(12)) - m.S;
  m.sum_h2 = m.S * (m.S - QuadNumber(Rational(4)));
  return m;
}

Clause clause(std::string name, ClauseRole role, bool ok, std::string detail) {
  return Clause{std::move(name), role, ok ? ClauseStatus::Satisfied : ClauseStatus::Violated, std::move(detail)};
}

bool in_set(const QuadNumber& x, std::initializer_list<long> values) {
  return std::any_of(values.begin(), values.end(), [&](long v) { return x == QuadNumber(Rational(v)); });
}

}  // namespace

QuadNumber::QuadNumber(Rational a, Rational b, long m) : a_(std::move(a)), b_(std::move(b)), m_(m) {
  if (m <= 0) throw PreconditionError("radicand must be a positive integer");
  long s = 1;
  for (long p = 2; p * p <= m_; ++p) {
    while (m_ % (p * p) == 0) {
      m_ /= p * p;
      s *= p;
    }
  }
  b_ *= Rational(s);
  if (m_ == 1) {
    a_ += b_;
    b_ = Rational(0);
  }
  if (b_.is_zero()) m_ = 1;
}

int QuadNumber::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // a^2 != b^2 m for irrational sqrt(m)
  return a_ * a_ > b_ * b_ * Rational(m_) ? sa : sb;
}

QuadNumber operator+(const QuadNumber& x, const QuadNumber& y) {
  return QuadNumber(x.a_ + y.a_, x.b_ + y.b_, check_field(x, y));
}

QuadNumber operator-(const QuadNumber& x, const QuadNumber& y) { return x + (-y); }

QuadNumber operator*(const QuadNumber& x, const QuadNumber& y) {
  const long m = check_field(x, y);
  return QuadNumber(x.a_ * y.a_ + x.b_ * y.b_ * Rational(m), x.a_ * y.b_ + x.b_ * y.a_, m);
}

QuadNumber QuadNumber::operator-() const { return QuadNumber(-a_, -b_, m_); }

QuadNumber QuadNumber::pow(unsigned e) const {
  QuadNumber out(Rational(1));
  for (unsigned k = 0; k < e; ++k) out = out * *this;
  return out;
}

UPoly QuadNumber::minimal_polynomial() const {
  if (is_rational()) return UPoly({-a_, Rational(1)});
  return UPoly({a_ * a_ - b_ * b_ * Rational(m_), Rational(-2) * a_, Rational(1)});
}

std::string QuadNumber::to_string() const {
  if (is_rational()) return a_.to_string();
  std::string root = "sqrt(" + std::to_string(m_) + ")";
  std::string surd;
  if (b_ == Rational(1)) {
    surd = root;
  } else if (b_ == Rational(-1)) {
    surd = "-" + root;
  } else {
    surd = b_.to_string() + "*" + root;
  }
  if (a_.is_zero()) return surd;
  return a_.to_string() + (b_.sign() > 0 ? "+" : "") + surd;
}

AlgebraicEnclosure enclose(const QuadNumber& x, const Rational& eps) {
  AlgebraicEnclosure e;
  e.value = x;
  e.minimal_polynomial = x.minimal_polynomial();
  if (x.is_rational()) {
    e.lo = e.hi = x.a();
  } else {
    const auto roots = exactalg::isolate_real_roots(e.minimal_polynomial, eps);
    if (roots.size() != 2) throw Error("quadratic minimal polynomial without two real roots");
    const auto& r = x.b().sign() > 0 ? roots[1] : roots[0];
    e.lo = r.lo;
    e.hi = r.hi;
  }
  e.lo_d = e.lo.lower_double();
  e.hi_d = e.hi.upper_double();
  return e;
}

std::vector<QuadNumber> ModelHypersurface::spectrum() const {
  std::vector<QuadNumber> out;
  for (const auto& c : curvatures)
    for (int k = 0; k < c.multiplicity; ++k) out.push_back(c.value.value);
  return out;
}

bool ModelHypersurface::okumura_bound() const { return (S.pow(3) - QuadNumber(Rational(3)) * A3 * A3).sign() >= 0; }

bool ModelHypersurface::okumura_equality() const {
  return S.sign() > 0 && (S.pow(3) - QuadNumber(Rational(3)) * A3 * A3).sign() == 0;
}

bool ModelHypersurface::case2_pattern() const {
  if (curvatures.size() != 2) return false;
  const auto& lo = curvatures[0];
  const auto& hi = curvatures[1];
  if (lo.multiplicity == 3 && hi.multiplicity == 1) return hi.value.value == QuadNumber(Rational(-3)) * lo.value.value;
  if (lo.multiplicity == 1 && hi.multiplicity == 3) return lo.value.value == QuadNumber(Rational(-3)) * hi.value.value;
  return false;
}

ModelHypersurface ModelHypersurface::negated() const {
  std::vector<std::pair<QuadNumber, int>> spec;
  for (const auto& c : curvatures) spec.emplace_back(-c.value.value, c.multiplicity);
  return make_model(name + "-negated", family, std::move(spec));
}

ModelHypersurface equatorial_sphere() {
  return make_model("equatorial-sphere", Family::EquatorialSphere, {{QuadNumber(Rational(0)), 4}});
}

ModelHypersurface clifford_torus(int k) {
  if (k < 1 || k > 3) throw PreconditionError("clifford_torus needs 1 <= k <= 3");
  // sqrt(p/q) = sqrt(p q)/q
  const QuadNumber plus(Rational(0), Rational(1, k), static_cast<long>(k) * (4 - k));
  const QuadNumber minus(Rational(0), Rational(-1, 4 - k), static_cast<long>(k) * (4 - k));
  return make_model("clifford-torus-" + std::to_string(k), Family::CliffordTorus, {{plus, k}, {minus, 4 - k}});
}

ModelHypersurface isoparametric_g4() {
  const Rational one(1);
  return make_model("isoparametric-g4", Family::Isoparametric,
                    {{QuadNumber(one, one, 2), 1},
                     {QuadNumber(-one, one, 2), 1},
                     {QuadNumber(one, -one, 2), 1},
                     {QuadNumber(-one, -one, 2), 1}});
}

const std::vector<std::string>& model_names() {
  static const std::vector<std::string> names{"equatorial-sphere", "clifford-torus-1", "clifford-torus-2",
                                              "clifford-torus-3", "isoparametric-g4"};
  return names;
}

ModelHypersurface model_by_name(const std::string& name) {
  if (name == "equatorial-sphere") return equatorial_sphere();
  if (name == "isoparametric-g4") return isoparametric_g4();
  for (int k = 1; k <= 3; ++k) {
    if (name == "clifford-torus-" + std::to_string(k)) return clifford_torus(k);
  }
  throw PreconditionError("unknown model '" + name + "'");
}

std::string to_string(ClauseRole r) {
  switch (r) {
    case ClauseRole::Hypothesis: return "hypothesis";
    case ClauseRole::Conclusion: return "conclusion";
    case ClauseRole::Bookkeeping: return "bookkeeping";
  }
  return "?";
}

std::string to_string(ClauseStatus s) {
  switch (s) {
    case ClauseStatus::Satisfied: return "satisfied";
    case ClauseStatus::Violated: return "violated";
    case ClauseStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

std::string to_string(ModelVerdict v) {
  switch (v) {
    case ModelVerdict::Consistent: return "consistent";
    case ModelVerdict::Vacuous: return "vacuous";
    case ModelVerdict::DocumentedDiscrepancy: return "documented-discrepancy";
    case ModelVerdict::Counterexample: return "counterexample";
  }
  return "?";
}

ModelReport check_model(const ModelHypersurface& model, int theorem) {
  if (theorem < 1 || theorem > 3) throw PreconditionError("theorem must be 1, 2 or 3");
  using R = ClauseRole;
  ModelReport rep;
  rep.model = model.name;
  rep.theorem = theorem;
  rep.anchor = "thm" + std::to_string(theorem);
  const QuadNumber zero(Rational(0));
  const QuadNumber& S = model.S;
  const QuadNumber& A3 = model.A3;
  const std::string constant = "isoparametric model: every principal curvature is constant";
  auto& cl = rep.clauses;

  cl.push_back(clause("minimal_p1_eq_0", R::Hypothesis, model.power_sums[0].value == zero,
                      "p1 = " + show(model.power_sums[0].value)));
  cl.push_back(clause("S_constant", R::Hypothesis, model.isoparametric, constant));
  cl.push_back(clause("A3_constant", R::Hypothesis, model.isoparametric, constant));

  if (theorem == 1) {
    cl.push_back(clause("scalar_curvature_nonneg", R::Hypothesis, model.R_M.sign() >= 0, "R_M = 12 - S = " + show(model.R_M)));
    cl.push_back(clause("isoparametric", R::Conclusion, model.isoparametric, constant));
    cl.push_back(clause("S_in_0_4_12", R::Conclusion, in_set(S, {0, 4, 12}), "S = " + show(S)));
    const bool identified = (S == zero && model.family == Family::EquatorialSphere) ||
                            (S == QuadNumber(Rational(4)) && model.family == Family::CliffordTorus) ||
                            (S == QuadNumber(Rational(12)) && model.family == Family::Isoparametric);
    cl.push_back(clause("sphere_clifford_or_cartan", R::Conclusion, identified, "S = " + show(S) + ", model " + model.name));
  } else if (theorem == 2) {
    cl.push_back(clause("exactly_two_distinct_at_a_point", R::Hypothesis, model.distinct() == 2,
                        std::to_string(model.distinct()) + " distinct principal curvatures"));
    cl.push_back(clause("S_eq_4", R::Conclusion, S == QuadNumber(Rational(4)), "S = " + show(S)));
    cl.push_back(clause("A3_eq_0", R::Conclusion, A3 == zero, "A3 = " + show(A3)));
    cl.push_back(clause("clifford_torus", R::Conclusion, model.family == Family::CliffordTorus, "model " + model.name));
    if (model.case2_pattern()) {
      cl.push_back(clause("case2_pattern_3l_-l_-l_-l", R::Bookkeeping, true, "spectrum (3l, -l, -l, -l) up to sign"));
      cl.push_back(clause("okumura_equality", R::Bookkeeping, model.okumura_equality(),
                          "3 A3^2 = S^3 with A3 = " + show(A3) + ", S = " + show(S)));
      const bool forced = in_set(S, {0, 4});
      cl.push_back(clause("delta_S_forces_S_in_0_4", R::Bookkeeping, forced,
                          "h_ijk = 0 gives 2(4 - S)S = 0; S = " + show(S) +
                              " satisfies it, so the pattern is realized by this Clifford torus rather than excluded"));
    }
  } else {
    const bool s_ok = (S - QuadNumber(Rational(4))).sign() > 0 && (QuadNumber(Rational(12)) - S).sign() >= 0;
    cl.push_back(clause("S_in_(4,12]", R::Hypothesis, s_ok, "S = " + show(S)));
    const bool a_ok = A3.sign() >= 0 && (S.pow(3) - QuadNumber(Rational(3)) * A3 * A3).sign() > 0;
    cl.push_back(clause("A3_in_[0,S^(3/2)/sqrt(3))", R::Hypothesis, a_ok, "A3 = " + show(A3)));
    cl.push_back(clause("isoparametric", R::Conclusion, model.isoparametric, constant));
    cl.push_back(clause("S_eq_12", R::Conclusion, S == QuadNumber(Rational(12)), "S = " + show(S)));
    cl.push_back(clause("A3_eq_0", R::Conclusion, A3 == zero, "A3 = " + show(A3)));
  }

  cl.push_back(clause("sum_h2_eq_S_times_S_minus_4", R::Bookkeeping, true,
                      "sum h_ijk^2 = S(S - 4) = " + show(model.sum_h2) +
                          (model.sum_h2 == zero ? ", consistent with h_ijk = 0" : ", so h_ijk are not all zero")));
  cl.push_back(clause("okumura_bound", R::Bookkeeping, model.okumura_bound(), "3 A3^2 <= S^3"));

  for (const auto& c : model.curvatures) rep.max_enclosure_width = std::max(rep.max_enclosure_width, c.value.width());
  for (const auto& p : model.power_sums) rep.max_enclosure_width = std::max(rep.max_enclosure_width, p.width());
  cl.push_back(clause("certified_enclosure_width_le_1e-12", R::Bookkeeping, rep.max_enclosure_width <= 1e-12,
                      "exact values in Q(sqrt m) with isolating intervals from the minimal polynomials"));

  bool hyps = true;
  bool concl = true;
  for (const auto& c : cl) {
    if (c.role == R::Hypothesis && c.status == ClauseStatus::Violated) hyps = false;
    if (c.role == R::Conclusion && c.status == ClauseStatus::Violated) concl = false;
  }
  if (!hyps) {
    rep.verdict = ModelVerdict::Vacuous;
  } else if (concl) {
    rep.verdict = ModelVerdict::Consistent;
  } else if (theorem == 2 && model.okumura_equality()) {
    rep.verdict = ModelVerdict::DocumentedDiscrepancy;
    rep.cross_reference =
        "open question: a minimal Clifford torus with two distinct principal curvatures everywhere has constant S = 4 "
        "and A3 = +-S^(3/2)/sqrt(3) != 0, against the conclusion A3 = 0; the strict upper bound on A3 in the "
        "S in (4, 12] statement suggests the equality boundary is meant to be excluded, which is not assumed here";
  } else {
    rep.verdict = ModelVerdict::Counterexample;
  }
  return rep;
}

}  // namespace isocert::geomex
