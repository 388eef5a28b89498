#pragma once

#include <string>
#include <vector>

#include "isocert/exactalg/rational.hpp"
#include "isocert/exactalg/upoly.hpp"

namespace isocert::geomex {

using exactalg::Rational;
using exactalg::UPoly;

/// a + b sqrt(m) with m a squarefree positive integer; m = 1 exactly when b = 0.
class QuadNumber {
 public:
  QuadNumber() = default;
  QuadNumber(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadNumber(Rational a, Rational b, long m);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  long m() const noexcept { return m_; }
  bool is_rational() const { return b_.is_zero(); }
  int sign() const;

  friend QuadNumber operator+(const QuadNumber& x, const QuadNumber& y);
  friend QuadNumber operator-(const QuadNumber& x, const QuadNumber& y);
  friend QuadNumber operator*(const QuadNumber& x, const QuadNumber& y);
  QuadNumber operator-() const;
  QuadNumber pow(unsigned e) const;
  friend bool operator==(const QuadNumber& x, const QuadNumber& y) = default;

  /// Monic minimal polynomial over Q (degree 1 or 2).
  UPoly minimal_polynomial() const;
  std::string to_string() const;

 private:
  Rational a_;
  Rational b_;
  long m_ = 1;
};

/// Exact algebraic number with a certified enclosure.
struct AlgebraicEnclosure {
  QuadNumber value;
  UPoly minimal_polynomial;
  Rational lo;
  Rational hi;
  /// Outward-rounded double bounds of [lo, hi].
  double lo_d = 0.0;
  double hi_d = 0.0;
  double width() const { return hi_d - lo_d; }
};

AlgebraicEnclosure enclose(const QuadNumber& x, const Rational& eps = Rational(1, 10000000000000));

enum class Family { EquatorialSphere, CliffordTorus, Isoparametric };

struct PrincipalCurvature {
  AlgebraicEnclosure value;
  int multiplicity = 1;
};

struct ModelHypersurface {
  std::string name;
  Family family = Family::EquatorialSphere;
  /// Distinct principal curvatures in increasing order.
  std::vector<PrincipalCurvature> curvatures;
  /// p1..p4 as power sums over the full multiset.
  std::vector<AlgebraicEnclosure> power_sums;
  QuadNumber S;
  QuadNumber A3;
  QuadNumber R_M;
  /// Sum of h_ijk^2 forced by Delta S = 0 for constant S: S (S - 4).
  QuadNumber sum_h2;
  bool isoparametric = true;

  int distinct() const { return static_cast<int>(curvatures.size()); }
  /// Full multiset lam1 <= ... <= lam4.
  std::vector<QuadNumber> spectrum() const;
  /// 3 p3^2 <= p2^3.
  bool okumura_bound() const;
  /// Equality in the bound with S > 0.
  bool okumura_equality() const;
  /// Spectrum of the form (3l, -l, -l, -l) up to sign, l != 0.
  bool case2_pattern() const;
  ModelHypersurface negated() const;
};

ModelHypersurface equatorial_sphere();
/// S^k x S^{4-k}: sqrt((4-k)/k) with multiplicity k, -sqrt(k/(4-k)) with multiplicity 4-k.
ModelHypersurface clifford_torus(int k);
/// cot(j pi / 8), j = 1, 3, 5, 7.
ModelHypersurface isoparametric_g4();

/// Catalog names: equatorial-sphere, clifford-torus-1..3, isoparametric-g4.
const std::vector<std::string>& model_names();
ModelHypersurface model_by_name(const std::string& name);

enum class ClauseRole { Hypothesis, Conclusion, Bookkeeping };
enum class ClauseStatus { Satisfied, Violated, NotApplicable };
std::string to_string(ClauseRole r);
std::string to_string(ClauseStatus s);

struct Clause {
  std::string name;
  ClauseRole role = ClauseRole::Hypothesis;
  ClauseStatus status = ClauseStatus::NotApplicable;
  std::string detail;
};

/// consistent: hypotheses and conclusions hold; vacuous: some hypothesis fails;
/// documented-discrepancy: hypotheses hold, a conclusion fails on a known case.
enum class ModelVerdict { Consistent, Vacuous, DocumentedDiscrepancy, Counterexample };
std::string to_string(ModelVerdict v);

struct ModelReport {
  std::string model;
  int theorem = 0;
  std::string anchor;
  std::vector<Clause> clauses;
  ModelVerdict verdict = ModelVerdict::Consistent;
  std::string cross_reference;
  /// Largest enclosure width among the model's certified quantities.
  double max_enclosure_width = 0.0;
};

ModelReport check_model(const ModelHypersurface& model, int theorem);

}  // namespace isocert::geomex
