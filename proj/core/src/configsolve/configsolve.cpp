#include "isocert/configsolve/configsolve.hpp"

#include <algorithm>
#include <cctype>

#include "isocert/errors.hpp"
#include "isocert/exactalg/multipoly.hpp"

namespace isocert::configsolve {

namespace {

using exactalg::MultiPoly;
using exactalg::SymbolTable;

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool perfect_square(const mpz_class& z) { return z >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0; }

mpz_class isqrt(const mpz_class& z) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

Surd normalized(Rational r, Rational m) {
  if (m.sign() < 0) throw PreconditionError("square root of a negative number");
  if (m.is_zero() || r.is_zero()) return Surd{Rational(0), Rational(1)};
  if (perfect_square(m.numerator()) && perfect_square(m.denominator())) {
    return Surd{r * Rational(isqrt(m.numerator()), isqrt(m.denominator())), Rational(1)};
  }
  return Surd{std::move(r), std::move(m)};
}

UPoly cst(const Rational& c) { return UPoly::constant(c); }

struct Coincidences {
  bool eq12 = false;
  bool eq23 = false;
  bool eq34 = false;
};

std::vector<unsigned> group(const Coincidences& c) {
  std::vector<unsigned> out{1};
  for (bool eq : {c.eq12, c.eq23, c.eq34}) {
    if (eq) {
      ++out.back();
    } else {
      out.push_back(1);
    }
  }
  return out;
}

/// Quartic discriminant in (e4, A) for x^4 - (S/2) x^2 - (A/3) x + e4.
MultiPoly discriminant_in_e4(const Rational& S) {
  const auto t = SymbolTable::make({"x", "e4", "A"});
  const MultiPoly x = MultiPoly::variable(t, "x");
  const MultiPoly q = x.pow(4) - x.pow(2) * (S / Rational(2)) - MultiPoly::variable(t, "A") * x * Rational(1, 3) +
                      MultiPoly::variable(t, "e4");
  return exactalg::resultant(q, q.derivative(0), 0);
}

}  // namespace

Surd Surd::parse(std::string_view text) {
  const std::string s = trim(text);
  const auto at = s.find("sqrt(");
  if (at == std::string::npos) return Surd{Rational::parse(s), Rational(1)};
  const auto close = s.find(')', at);
  if (close == std::string::npos) throw PreconditionError("unbalanced sqrt( in '" + s + "'");
  std::string prefix = trim(s.substr(0, at));
  if (!prefix.empty() && prefix.back() == '*') prefix = trim(prefix.substr(0, prefix.size() - 1));
  Rational r(1);
  if (prefix == "-") {
    r = Rational(-1);
  } else if (!prefix.empty() && prefix != "+") {
    r = Rational::parse(prefix);
  }
  const Rational m = Rational::parse(trim(s.substr(at + 5, close - at - 5)));
  const std::string suffix = trim(s.substr(close + 1));
  if (!suffix.empty()) {
    if (suffix[0] == '/') {
      r /= Rational::parse(trim(suffix.substr(1)));
    } else if (suffix[0] == '*') {
      r *= Rational::parse(trim(suffix.substr(1)));
    } else {
      throw PreconditionError("cannot parse '" + s + "' as r*sqrt(m)");
    }
  }
  return normalized(r, m);
}

bool Surd::is_rational() const { return normalized(r, m).m.is_one(); }

Rational Surd::rational() const {
  const Surd n = normalized(r, m);
  if (!n.m.is_one()) throw PreconditionError(to_string() + " is irrational");
  return n.r;
}

Interval Surd::enclosure() const {
  if (is_rational()) return Interval::from_rational(rational());
  return Interval::from_rational(r) * certify::sqrt(Interval::from_rational(m));
}

std::string Surd::to_string() const {
  const Surd n = normalized(r, m);
  if (n.m.is_one()) return n.r.to_string();
  return n.r.to_string() + "*sqrt(" + n.m.to_string() + ")";
}

std::vector<std::string> admissibility_warnings(const ScalarParams& p) {
  std::vector<std::string> out;
  if (p.S <= Rational(4) || p.S > Rational(12)) out.push_back("S = " + p.S.to_string() + " lies outside (4, 12]");
  if (p.A3.sign() < 0) out.push_back("A3 < 0; the sign convention assumes A3 >= 0");
  // A3 < S^{3/2}/sqrt(3)  <=>  3 A3^2 < S^3 for A3 >= 0
  if (p.A3.sign() >= 0 && Rational(3) * p.A3.square() >= p.S.pow(3)) {
    out.push_back("A3 = " + p.A3.to_string() + " is not below S^{3/2}/sqrt(3)");
  }
  return out;
}

std::string to_string(SystemTag tag) {
  switch (tag) {
    case SystemTag::I: return "I";
    case SystemTag::II: return "II";
    case SystemTag::III: return "III";
    default: return "free";
  }
}

SystemTag parse_system(std::string_view text) {
  if (text == "I") return SystemTag::I;
  if (text == "II") return SystemTag::II;
  if (text == "III") return SystemTag::III;
  throw PreconditionError("system must be I, II or III");
}

UPoly newton_convert(const Rational& p1, const Rational& S, const Rational& A3, const Rational& e4) {
  if (!p1.is_zero()) throw PreconditionError("newton_convert needs p1 = 0");
  return UPoly({e4, -A3 / Rational(3), -S / Rational(2), Rational(0), Rational(1)});
}

std::vector<RootInterval> isolate_real_roots(const UPoly& poly, double precision) {
  if (!(precision > 0.0)) throw PreconditionError("precision must be positive");
  return exactalg::isolate_real_roots(poly, Rational::from_double(precision));
}

std::vector<CurvatureConfig> solve_system(SystemTag tag, const ScalarParams& params, double precision) {
  if (tag == SystemTag::Free) throw PreconditionError("solve_system needs system I, II or III");
  if (!(precision > 0.0)) throw PreconditionError("precision must be positive");
  const Rational& S = params.S;
  const UPoly x = UPoly::x();
  const UPoly x2 = x * x;
  // C(a) = p3 along the one-parameter family of the system
  const UPoly C = tag == SystemTag::I ? x2 * x * Rational(-60) + x * (Rational(3) * S)
                                      : x2 * x * Rational(12) - x * (Rational(3) * S);
  const bool squared = !params.A3.is_rational();
  const UPoly P = squared ? C * C - cst(params.A3.square()) : C - cst(params.A3.rational());
  const UPoly sf = exactalg::squarefree_part(P).monic();

  const UPoly q12 = cst(S) - x2 * Rational(12);
  const UPoly q4 = cst(S) - x2 * Rational(4);
  const UPoly q44 = cst(S) - x2 * Rational(44);
  const Interval Si = Interval::from_rational(S);
  const Interval A3i = params.A3.enclosure();
  const std::optional<MultiPoly> disc =
      tag == SystemTag::I ? std::nullopt : std::optional<MultiPoly>(discriminant_in_e4(S));

  // 2^-90 keeps the root enclosure far below double resolution
  const Rational eps = Rational(1) / Rational(mpz_class(1) << 90, mpz_class(1));
  std::vector<CurvatureConfig> out;
  for (const RootInterval& root : exactalg::isolate_real_roots(sf, eps)) {
    auto sign = [&](const UPoly& q) { return exactalg::sign_at_root(sf, root, q); };
    if (squared && sign(C) != params.A3.sign()) continue;
    const int sa = sign(x);
    Coincidences co;
    switch (tag) {
      case SystemTag::I:
        if (sa > 0 || sign(q12) < 0 || sign(q44) > 0) continue;
        co.eq12 = co.eq23 = sign(q12) == 0;
        co.eq34 = sign(q44) == 0;
        break;
      case SystemTag::II:
        if (sign(q12) < 0) continue;
        co.eq23 = true;
        co.eq12 = sa <= 0 && sign(q12) == 0;
        co.eq34 = sa >= 0 && sign(q12) == 0;
        break;
      default:
        if (sa > 0 || sign(q12) > 0 || sign(q4) < 0) continue;
        co.eq12 = true;
        co.eq23 = sign(q12) == 0;
        co.eq34 = sign(q4) == 0;
        break;
    }

    CurvatureConfig cfg;
    cfg.tag = tag;
    cfg.variable = tag == SystemTag::III ? "lam1" : "lam2";
    cfg.defining_poly = sf;
    cfg.root = root;
    const Interval a(root.lo.lower_double(), root.hi.upper_double());
    if (tag == SystemTag::I) {
      const Interval d = sign(q12) == 0 ? Interval(0.0)
                                        : certify::sqrt((Si - Interval(12.0) * certify::sqr(a)) / Interval(2.0));
      cfg.lambdas = {a - d, a, a + d, Interval(-3.0) * a};
    } else {
      const Interval D = sign(q4) == 0 ? Interval(0.0)
                                       : certify::sqrt(Si / Interval(2.0) - Interval(2.0) * certify::sqr(a));
      if (tag == SystemTag::II) {
        cfg.lambdas = {-a - D, a, a, -a + D};
      } else {
        cfg.lambdas = {a, a, -a - D, -a + D};
      }
    }
    for (unsigned k = 1; k <= 4; ++k) {
      Interval s(0.0);
      for (const auto& l : cfg.lambdas) s = s + certify::pow(l, k);
      cfg.power_sums[k - 1] = s;
    }
    cfg.multiplicities = group(co);
    const bool structural12 = tag == SystemTag::III;
    const bool structural23 = tag == SystemTag::II;
    if (co.eq12 && !structural12) cfg.flags.push_back("coincident: lam1 = lam2");
    if (co.eq23 && !structural23) cfg.flags.push_back("coincident: lam2 = lam3");
    if (co.eq34) cfg.flags.push_back("coincident: lam3 = lam4");

    if (disc) {
      const Interval e4 = cfg.lambdas[0] * cfg.lambdas[1] * cfg.lambdas[2] * cfg.lambdas[3];
      cfg.discriminant_vanishes = certify::interval_eval(*disc, {{"e4", e4}, {"A", A3i}}).contains_zero();
    }
    const auto& p = cfg.power_sums;
    cfg.verified = p[0].contains(Rational(0)) && p[1].contains(S) && certify::intersect(p[2], A3i).has_value() &&
                   p[0].width() <= precision && p[1].width() <= precision && p[2].width() <= precision &&
                   cfg.discriminant_vanishes.value_or(true);
    out.push_back(std::move(cfg));
  }
  return out;
}

Rational branch_p3(const Rational& lam4, const Rational& S) {
  return Rational(-6) * lam4 * (S / Rational(2) - Rational(2) * lam4 * lam4);
}

BranchIdentityReport case_branch_identities(const ScalarParams& params) {
  if (params.S.sign() <= 0) throw PreconditionError("case_branch_identities needs S > 0");
  BranchIdentityReport rep;

  // d stands for sqrt(S/2 - 2 lam4^2); every d^2 is rewritten.
  const auto t = SymbolTable::make({"d", "lam4", "S"});
  const MultiPoly d = MultiPoly::variable(t, "d");
  const MultiPoly l4 = MultiPoly::variable(t, "lam4");
  const MultiPoly Sv = MultiPoly::variable(t, "S");
  const MultiPoly Q = Sv * Rational(1, 2) - l4.pow(2) * Rational(2);
  auto reduce = [&](const MultiPoly& p) {
    const auto coeffs = p.coefficients_in(0);
    MultiPoly out(t);
    MultiPoly qk(t, Rational(1));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (k % 2 == 0) {
        if (k > 0) qk *= Q;
        out += coeffs[k] * qk;
      } else {
        out += coeffs[k] * qk * d;
      }
    }
    return out;
  };
  const std::array<MultiPoly, 4> lam{-l4 - d, -l4 + d, l4, l4};
  auto power_sum = [&](unsigned k) {
    MultiPoly s(t);
    for (const auto& l : lam) s += l.pow(k);
    return reduce(s);
  };
  const MultiPoly target = Rational(-6) * l4 * Q;
  const MultiPoly p3 = power_sum(3);
  rep.p1_identity = power_sum(1).is_zero();
  rep.p2_identity = power_sum(2) == Sv;
  rep.p3_identity = p3 == target;
  rep.p3_reduced = p3.to_string();
  rep.negativity_factors = {"-6 < 0", "lam4 > 0", "S/2 - 2*lam4^2 > 0"};
  // For the given S: p3(lam4) has no root with lam4 > 0 and S/4 - lam4^2 > 0, and is negative at
  // an interior rational point, so it is negative on the whole region.
  const UPoly x = UPoly::x();
  const UPoly branch = x * (cst(params.S / Rational(2)) - x * x * Rational(2)) * Rational(-6);
  const UPoly inside = cst(params.S / Rational(4)) - x * x;
  const UPoly sf = exactalg::squarefree_part(branch);
  bool root_inside = false;
  for (const auto& r : exactalg::isolate_real_roots(sf, Rational(1, 1024))) {
    if (exactalg::sign_at_root(sf, r, x) > 0 && exactalg::sign_at_root(sf, r, inside) > 0) root_inside = true;
  }
  Rational probe(1);
  while (inside.sign_at(probe) <= 0) probe /= Rational(2);
  rep.negativity = rep.p3_identity && !root_inside && branch.sign_at(probe) < 0;

  const auto tp = SymbolTable::make({"l"});
  const MultiPoly l = MultiPoly::variable(tp, "l");
  const std::array<MultiPoly, 4> pattern{l * Rational(3), -l, -l, -l};
  MultiPoly p2(tp);
  MultiPoly q3(tp);
  for (const auto& v : pattern) {
    p2 += v.pow(2);
    q3 += v.pow(3);
  }
  rep.pattern_identity = q3.pow(2) * Rational(3) == p2.pow(3);
  rep.contradicts_params = params.A3.sign() >= 0;
  return rep;
}

}  // namespace isocert::configsolve
