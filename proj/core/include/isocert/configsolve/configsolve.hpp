#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isocert/certify/interval.hpp"
#include "isocert/exactalg/upoly.hpp"

namespace isocert::configsolve {

using certify::Interval;
using exactalg::Rational;
using exactalg::RootInterval;
using exactalg::UPoly;

/// r * sqrt(m) with m >= 0; m = 1 for rational values.
struct Surd {
  Rational r;
  Rational m{1};

  /// "3", "-1/2", "0.25", "sqrt(3)", "8*sqrt(3)/3", "8sqrt(3)/3", "2/3*sqrt(5)".
  static Surd parse(std::string_view text);

  bool is_rational() const;
  /// Exact value when rational; throws PreconditionError otherwise.
  Rational rational() const;
  /// r^2 m.
  Rational square() const { return r * r * m; }
  int sign() const { return m.is_zero() ? 0 : r.sign(); }
  Interval enclosure() const;
  std::string to_string() const;
};

struct ScalarParams {
  Rational S;
  Surd A3;
};

/// Notes on where the parameters sit relative to 4 < S <= 12, 0 <= A3 < S^{3/2}/sqrt(3).
std::vector<std::string> admissibility_warnings(const ScalarParams& p);

enum class SystemTag { I, II, III, Free };
std::string to_string(SystemTag tag);
SystemTag parse_system(std::string_view text);

struct CurvatureConfig {
  SystemTag tag = SystemTag::Free;
  /// Eliminated variable: lam2 for (I) and (II), lam1 for (III).
  std::string variable;
  UPoly defining_poly;
  RootInterval root;
  std::array<Interval, 4> lambdas;      // sorted
  std::array<Interval, 4> power_sums;   // p1..p4
  std::vector<unsigned> multiplicities; // of the distinct values, ascending
  std::vector<std::string> flags;
  /// (II)/(III): the quartic discriminant, as a polynomial in e4, vanishes at this e4.
  std::optional<bool> discriminant_vanishes;
  /// p1 ~ 0, p2 ~ S, p3 ~ A3 certified with residual widths below the precision.
  bool verified = false;
};

/// x^4 + e2 x^2 - e3 x + e4 with e2 = -S/2, e3 = A3/3.
UPoly newton_convert(const Rational& p1, const Rational& S, const Rational& A3, const Rational& e4);

/// Isolating intervals of the distinct real roots with multiplicities.
std::vector<RootInterval> isolate_real_roots(const UPoly& poly, double precision);

std::vector<CurvatureConfig> solve_system(SystemTag tag, const ScalarParams& params, double precision = 1e-12);

/// p3 on the lam3 = lam4 branch: -6 lam4 (S/2 - 2 lam4^2).
Rational branch_p3(const Rational& lam4, const Rational& S);

struct BranchIdentityReport {
  bool p1_identity = false;
  bool p2_identity = false;
  bool p3_identity = false;
  std::string p3_reduced;
  /// p3 = (-6) * lam4 * (S/2 - 2 lam4^2) with every factor of fixed sign on the region.
  bool negativity = false;
  std::vector<std::string> negativity_factors;
  bool pattern_identity = false;  // 3 p3^2 = p2^3 for (3l, -l, -l, -l)
  /// The branch is incompatible with the given A3 >= 0.
  bool contradicts_params = false;
  bool pass() const { return p1_identity && p2_identity && p3_identity && negativity && pattern_identity; }
};

BranchIdentityReport case_branch_identities(const ScalarParams& params);

}  // namespace isocert::configsolve
