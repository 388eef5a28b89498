#include <array>
#include <cmath>
#include <sstream>

#include "bnb.hpp"
#include "isocert/certify/certify.hpp"
#include "isocert/errors.hpp"

namespace isocert::certify {

namespace {

using exactalg::SymbolTable;
using exactalg::SymbolTablePtr;

/// Dense bivariate polynomial with interval coefficients, c[a][b] for u^a v^b.
struct BiPoly {
  int deg = 0;
  std::vector<Interval> c;
  Interval& at(int a, int b) { return c[static_cast<std::size_t>(a * (deg + 1) + b)]; }
  const Interval& at(int a, int b) const { return c[static_cast<std::size_t>(a * (deg + 1) + b)]; }
};

BiPoly to_bipoly(const MultiPoly& p) {
  BiPoly b;
  b.deg = static_cast<int>(p.total_degree());
  b.c.assign(static_cast<std::size_t>((b.deg + 1) * (b.deg + 1)), Interval(0.0));
  for (const auto& t : p.terms()) b.at(t.mono[0], t.mono[1]) = Interval::from_rational(t.coef);
  return b;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;  // exact for the small n used here
}

/// q(u, v) = p(cu + u, cv + v).
BiPoly shift(const BiPoly& p, double cu, double cv) {
  BiPoly q{p.deg, std::vector<Interval>(p.c.size(), Interval(0.0))};
  std::vector<Interval> pu(static_cast<std::size_t>(p.deg + 1));
  std::vector<Interval> pv(static_cast<std::size_t>(p.deg + 1));
  for (int k = 0; k <= p.deg; ++k) {
    pu[static_cast<std::size_t>(k)] = pow(Interval(cu), static_cast<unsigned>(k));
    pv[static_cast<std::size_t>(k)] = pow(Interval(cv), static_cast<unsigned>(k));
  }
  for (int i = 0; i <= p.deg; ++i) {
    for (int j = 0; i + j <= p.deg; ++j) {
      const Interval& cij = p.at(i, j);
      if (cij.lo() == 0.0 && cij.hi() == 0.0) continue;
      for (int a = 0; a <= i; ++a) {
        for (int b = 0; b <= j; ++b) {
          q.at(a, b) += cij * Interval(binomial(i, a) * binomial(j, b)) * pu[static_cast<std::size_t>(i - a)] *
                        pv[static_cast<std::size_t>(j - b)];
        }
      }
    }
  }
  return q;
}

Interval eval_box(const BiPoly& p, const Interval& U, const Interval& V) {
  Interval acc(0.0);
  for (int a = 0; a <= p.deg; ++a) {
    for (int b = 0; a + b <= p.deg; ++b) {
      const Interval& c = p.at(a, b);
      if (c.lo() == 0.0 && c.hi() == 0.0) continue;
      acc += c * pow(U, static_cast<unsigned>(a)) * pow(V, static_cast<unsigned>(b));
    }
  }
  return acc;
}

/// Centered form: expand around the midpoint and evaluate on the symmetric offsets.
Interval enclose(const BiPoly& p, const Box& box) {
  const double cu = box.x.mid();
  const double cv = box.y.mid();
  const Interval U(box.x.lo() - cu, box.x.hi() - cu);
  const Interval V(box.y.lo() - cv, box.y.hi() - cv);
  // offsets computed in floating point: widen them outward
  const Interval Uw(std::nextafter(U.lo(), -1.0), std::nextafter(U.hi(), 1.0));
  const Interval Vw(std::nextafter(V.lo(), -1.0), std::nextafter(V.hi(), 1.0));
  return eval_box(shift(p, cu, cv), Uw, Vw);
}

/// F(c + h) >= (mu - sum_{|k|>=3} |c_k| rho^{|k|-2}) |h|^2 for |h| <= rho, from the exact
/// expansion at an equality point, where F, dF vanish and the Hessian is positive definite.
struct LocalBound {
  double cu = 0.0;
  double cv = 0.0;
  Interval mu;
  std::vector<std::pair<int, double>> higher;  // (degree, |coefficient| upper bound)
  bool valid = false;

  bool certifies(const Box& box) const {
    const Interval hu(box.x.lo() - cu, box.x.hi() - cu);
    const Interval hv(box.y.lo() - cv, box.y.hi() - cv);
    const double rho = sqrt(sqr(Interval(hu.mag())) + sqr(Interval(hv.mag()))).hi();
    Interval rest(0.0);
    for (const auto& [d, c] : higher) rest += Interval(c) * pow(Interval(rho), static_cast<unsigned>(d - 2));
    return valid && (mu - rest).lo() > 0.0;
  }
};

LocalBound local_bound(const MultiPoly& face, int cu, int cv) {
  const auto& t = face.table();
  const std::array<MultiPoly, 2> images{MultiPoly::variable(t, 0) + MultiPoly(t, Rational(cu)),
                                        MultiPoly::variable(t, 1) + MultiPoly(t, Rational(cv))};
  const MultiPoly g = face.compose(t, images);
  LocalBound lb;
  lb.cu = cu;
  lb.cv = cv;
  Rational quad[3];  // u^2, uv, v^2
  bool low_terms_vanish = true;
  for (const auto& term : g.terms()) {
    const int a = term.mono[0];
    const int b = term.mono[1];
    if (a + b < 2) low_terms_vanish = false;
    if (a + b == 2) quad[b] = term.coef;
    if (a + b >= 3) lb.higher.emplace_back(a + b, Interval::from_rational(term.coef).mag());
  }
  const Interval A = Interval::from_rational(quad[0]);
  const Interval B = Interval::from_rational(quad[1]);
  const Interval C = Interval::from_rational(quad[2]);
  lb.mu = Interval(0.5) * (A + C) - sqrt(sqr(Interval(0.5) * (A - C)) + sqr(Interval(0.5) * B));
  lb.valid = low_terms_vanish && lb.mu.lo() > 0.0;
  return lb;
}

struct Chart {
  int axis = 0;  // coordinate fixed to `sign`
  int sign = 1;
  BiPoly slack;  // unnormalized: c^2 |v|^6 - (sum a^3)^2
  std::array<LocalBound, 4> corners;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

Certificate certify_okumura(int n, double tol, double radius, int max_depth, unsigned threads) {
  if (n != 4) throw PreconditionError("certify_okumura is implemented for n = 4");
  if (!(tol > 0.0) || !(radius > 0.0)) throw PreconditionError("tol and radius must be positive");

  // Orthonormal basis of {sum a = 0} in R^4; a = x u1 + y u2 + z u3.
  const Rational h(1, 2);
  const std::array<std::array<Rational, 4>, 3> basis{{{h, h, -h, -h}, {h, -h, h, -h}, {h, -h, -h, h}}};
  const auto xyz = SymbolTable::make({"x", "y", "z"});
  std::array<MultiPoly, 4> a{MultiPoly(xyz), MultiPoly(xyz), MultiPoly(xyz), MultiPoly(xyz)};
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 4; ++i) a[i] += MultiPoly::variable(xyz, static_cast<std::size_t>(k)) * basis[k][i];
  MultiPoly s2(xyz);
  MultiPoly s3(xyz);
  for (const auto& ai : a) {
    s2 += ai.pow(2);
    s3 += ai.pow(3);
  }
  const Rational c2 = Rational((n - 2) * (n - 2)) / Rational(n * (n - 1));
  const MultiPoly F = s2.pow(3) * c2 - s3.pow(2);

  // Equality points: the eight images of permutations / sign flips of (3,-1,-1,-1)/sqrt(12)
  // are the cube corners (+-1, +-1, +-1) up to scale; F vanishes exactly there.
  int exact_zeros = 0;
  for (int m = 0; m < 8; ++m) {
    const std::array<Rational, 3> v{Rational(m & 1 ? -1 : 1), Rational(m & 2 ? -1 : 1), Rational(m & 4 ? -1 : 1)};
    if (F.evaluate(v).is_zero()) ++exact_zeros;
  }

  const auto uv = SymbolTable::make({"u", "v"});
  std::vector<Chart> charts;
  for (int axis = 0; axis < 3; ++axis) {
    for (int sign : {1, -1}) {
      std::array<MultiPoly, 3> images{MultiPoly(uv), MultiPoly(uv), MultiPoly(uv)};
      int free = 0;
      for (int k = 0; k < 3; ++k) {
        images[static_cast<std::size_t>(k)] =
            k == axis ? MultiPoly(uv, Rational(sign)) : MultiPoly::variable(uv, static_cast<std::size_t>(free++));
      }
      const MultiPoly face = F.compose(uv, images);
      Chart ch;
      ch.axis = axis;
      ch.sign = sign;
      ch.slack = to_bipoly(face);
      for (int m = 0; m < 4; ++m) ch.corners[static_cast<std::size_t>(m)] = local_bound(face, m & 1 ? -1 : 1, m & 2 ? -1 : 1);
      charts.push_back(std::move(ch));
    }
  }

  const double c = std::sqrt(c2.to_double());
  auto eval = [&](const detail::Tagged& t, int) {
    detail::CellResult r;
    const Chart& ch = charts[static_cast<std::size_t>(t.chart)];
    const Box& b = t.box;
    const Interval n2 = Interval(1.0) + sqr(b.x) + sqr(b.y);  // |v|^2
    const Interval n6 = pow(n2, 3);
    const Interval f = b.x.width() < 0.25 ? enclose(ch.slack, b) : eval_box(ch.slack, b.x, b.y);
    const Interval ns = f / n6;
    const double slack_lo = ns.lo();
    const double slack_hi = ns.hi();
    if (slack_lo >= tol) {
      r.verdict = detail::Verdict::Resolved;
      r.maxima = {-slack_lo, -std::numeric_limits<double>::infinity()};
      return r;
    }
    // nearest equality point: the corner of this face on the side of the cell center
    const int su = b.x.mid() >= 0.0 ? 1 : -1;
    const int sv = b.y.mid() >= 0.0 ? 1 : -1;
    const LocalBound& lb = ch.corners[static_cast<std::size_t>((su < 0 ? 1 : 0) | (sv < 0 ? 2 : 0))];
    // chord to the corner direction c = (su, sv, sign): v x c = h x c with h = v - c
    const Interval hu = b.x - Interval(su);
    const Interval hv = b.y - Interval(sv);
    const Interval cross2 = sqr(hu) + sqr(hv) + sqr(Interval(su) * hu - Interval(sv) * hv);
    const Interval sin2 = cross2 / (Interval(3.0) * Interval(n2.lo()));
    double dist = 2.0;
    if (sin2.hi() < 1.0) {
      const Interval cosang = sqrt(Interval(1.0) - Interval(sin2.hi()));
      dist = sqrt(Interval(2.0) * Interval(sin2.hi()) / (Interval(1.0) + Interval(cosang.lo()))).hi();
    }
    if (dist <= radius && lb.certifies(b)) {
      r.verdict = detail::Verdict::Resolved;
      r.maxima = {-std::numeric_limits<double>::infinity(), dist};
      return r;
    }
    r.verdict = slack_hi < 0.0 ? detail::Verdict::Violated : detail::Verdict::Undecided;
    return r;
  };

  std::vector<detail::Tagged> roots;
  for (int k = 0; k < static_cast<int>(charts.size()); ++k) {
    roots.push_back(detail::Tagged{Box{Interval(-1.0, 1.0), Interval(-1.0, 1.0)}, k});
  }
  const auto out = detail::run(std::move(roots), max_depth, 0, 2, threads, eval);

  Certificate cert;
  cert.claim = "(sum a^3)^2 <= (n-2)^2/(n(n-1)) (sum a^2)^3";
  cert.region = "sum a = 0, sum a^2 = 1, n = 4; six cube-face charts of the unit sphere in {sum a = 0}";
  cert.cells_processed = out.cells;
  cert.max_depth = out.depth;
  cert.margin_achieved = std::isfinite(out.maxima[0]) ? -out.maxima[0] : 0.0;
  for (const auto& v : out.violated) cert.offending.push_back(v.box);
  for (const auto& u : out.undecided) {
    if (cert.offending.size() < Certificate::kMaxListedCells) cert.offending.push_back(u.box);
  }
  cert.offending_total = out.violated_total + out.undecided_total;
  bool corners_ok = exact_zeros == 8;
  for (const auto& ch : charts)
    for (const auto& lb : ch.corners) corners_ok = corners_ok && lb.valid;
  cert.status = out.violated_total ? Status::Failed
                                   : ((out.undecided_total || !corners_ok) ? Status::Inconclusive : Status::Proved);
  cert.values = {{"equality_constant", c},
                 {"tol", tol},
                 {"radius", radius},
                 {"max_low_slack_distance", std::isfinite(out.maxima[1]) ? out.maxima[1] : 0.0},
                 {"equality_points", static_cast<double>(exact_zeros)}};
  cert.note = "margin_achieved = min normalized slack over cells cleared by tol; cells below tol lie within " +
              fmt(radius) + " of an equality point, where an exact local quadratic bound closes them";
  return cert;
}

}  // namespace isocert::certify
