#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include "bnb.hpp"
#include "isocert/certify/certify.hpp"
#include "isocert/errors.hpp"
#include "isocert/frameforms/stated.hpp"

namespace isocert::certify {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct ExactContext {
  std::array<Rational, 4> lam;
  Rational d(int i, int j) const { return lam[i - 1] - lam[j - 1]; }
  Rational k(long v) const { return Rational(v); }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Proved: return "proved";
    case Status::Failed: return "failed";
    default: return "inconclusive";
  }
}

Box chamber_root_box(double S) {
  // sum_{i<j} (lam_j - lam_i)^2 = 4S and three of those terms contain g1 (likewise g3)
  const double R = sqrt(Interval(4.0) * Interval(S) / Interval(3.0)).hi();
  return Box{Interval(0.0, R), Interval(0.0, R)};
}

namespace {

/// g2 from 4 g2^2 + 4 g2 (g1 + g3) + 2 g1^2 + (g1 + g3)^2 + 2 g3^2 = 4S (nonnegative root).
Interval middle_gap(const Interval& S, const Interval& g1, const Interval& g3) {
  const Interval rad = Interval(4.0) * S - Interval(2.0) * (sqr(g1) + sqr(g3));
  return Interval(0.5) * (sqrt(rad) - (g1 + g3));
}

}  // namespace

std::optional<ChamberCell> chamber_cell(double S, const Box& box, const GapFloors& floors) {
  const auto g1 = intersect(box.x, Interval(floors.g1, floors.g1_cap));
  const auto g3 = intersect(box.y, Interval(floors.g3, kInf));
  if (!g1 || !g3) return std::nullopt;
  const Interval Si(S);
  if ((Interval(4.0) * Si - Interval(2.0) * (sqr(*g1) + sqr(*g3))).hi() < 0.0) return std::nullopt;
  const auto g2 = intersect(middle_gap(Si, *g1, *g3), Interval(floors.g2, floors.g2_cap));
  if (!g2) return std::nullopt;
  ChamberCell c;
  c.g1 = *g1;
  c.g2 = *g2;
  c.g3 = *g3;
  // zero sum: 4 lam1 + 3 g1 + 2 g2 + g3 = 0
  c.lam[0] = Interval(-0.25) * (Interval(3.0) * c.g1 + Interval(2.0) * c.g2 + c.g3);
  c.lam[1] = Interval(0.25) * (c.g1 - Interval(2.0) * c.g2 - c.g3);
  c.lam[2] = Interval(0.25) * (c.g1 + Interval(2.0) * c.g2 - c.g3);
  c.lam[3] = Interval(0.25) * (c.g1 + Interval(2.0) * c.g2 + Interval(3.0) * c.g3);
  return c;
}

std::optional<std::array<double, 4>> chamber_point(double S, double g1, double g3) {
  const double rad = 4.0 * S - 2.0 * (g1 * g1 + g3 * g3);
  if (rad < 0.0) return std::nullopt;
  const double g2 = 0.5 * (std::sqrt(rad) - g1 - g3);
  if (g2 < 0.0) return std::nullopt;
  const double l1 = -0.25 * (3.0 * g1 + 2.0 * g2 + g3);
  return std::array<double, 4>{l1, l1 + g1, l1 + g1 + g2, l1 + g1 + g2 + g3};
}

Certificate certify_Li_negative(double S, double tau, double margin, int max_depth, unsigned threads) {
  if (!(S > 0.0)) throw PreconditionError("certify_Li_negative needs S > 0");
  if (!(tau > 0.0)) throw PreconditionError("certify_Li_negative needs tau > 0 (gamma L_i vanish where gaps close)");
  if (!(margin >= 0.0)) throw PreconditionError("margin must be nonnegative");
  if (max_depth < 0) throw PreconditionError("max_depth must be nonnegative");

  const GapFloors floors{tau, tau, tau};
  auto eval = [&](const detail::Tagged& t, int depth) {
    detail::CellResult r;
    const auto cell = chamber_cell(S, t.box, floors);
    if (!cell) {
      r.verdict = detail::Verdict::Empty;
      return r;
    }
    const GapContext ctx{cell->g1, cell->g2, cell->g3};
    double worst = -kInf;
    bool all_clear = true;
    bool any_violated = false;
    for (int i = 1; i <= 4; ++i) {
      const Interval v = frameforms::stated::gamma_L(ctx, i);
      worst = std::max(worst, v.hi());
      if (v.hi() > -margin) all_clear = false;
      if (v.lo() > -margin) any_violated = true;
    }
    r.maxima = {worst};
    if (all_clear) {
      r.verdict = detail::Verdict::Resolved;
    } else {
      // enclosures may cover points off the region: only a feasible exact witness is a violation
      r.verdict = detail::Verdict::Undecided;
      if (any_violated || depth == max_depth) {
        const auto p = chamber_point(S, t.box.x.mid(), t.box.y.mid());
        if (p && (*p)[1] - (*p)[0] >= tau && (*p)[2] - (*p)[1] >= tau && (*p)[3] - (*p)[2] >= tau) {
          const ExactContext ex{{Rational::from_double((*p)[0]), Rational::from_double((*p)[1]),
                                 Rational::from_double((*p)[2]), Rational::from_double((*p)[3])}};
          for (int i = 1; i <= 4; ++i) {
            if (frameforms::stated::gamma_L(ex, i) > Rational::from_double(-margin)) r.verdict = detail::Verdict::Violated;
          }
        }
      }
    }
    return r;
  };
  const auto out = detail::run({detail::Tagged{chamber_root_box(S), 0}}, max_depth, 0, 1, threads, eval);

  Certificate c;
  c.claim = "gamma*L_i <= -margin, i = 1..4";
  c.region = "sum lam = 0, sum lam^2 = " + fmt(S) + ", lam1 < lam2 < lam3 < lam4, all gaps >= " + fmt(tau);
  c.cells_processed = out.cells;
  c.max_depth = out.depth;
  c.margin_achieved = std::isfinite(out.maxima[0]) ? -out.maxima[0] : 0.0;
  for (const auto& v : out.violated) c.offending.push_back(v.box);
  for (const auto& u : out.undecided) {
    if (c.offending.size() < Certificate::kMaxListedCells) c.offending.push_back(u.box);
  }
  c.offending_total = out.violated_total + out.undecided_total;
  c.status = out.violated_total ? Status::Failed : (out.undecided_total ? Status::Inconclusive : Status::Proved);
  c.values = {{"margin", margin}, {"tau", tau}};
  c.note = "margin_achieved = -max over leaves of the upper bounds of gamma*L_i; gamma > 0 on the region";
  return c;
}

std::array<Rational, 4> L_at(const std::array<Rational, 4>& lam) {
  const ExactContext ctx{lam};
  const Rational g = frameforms::stated::gamma(ctx);
  if (g.is_zero()) throw PoleError("gamma vanishes: lam1, lam2, lam3 are not distinct");
  std::array<Rational, 4> out;
  for (int i = 1; i <= 4; ++i) out[static_cast<std::size_t>(i - 1)] = frameforms::stated::gamma_L(ctx, i) / g;
  return out;
}

CrossCheck li_cross_check(double S, double tau, std::uint64_t samples, std::uint64_t seed) {
  if (!(S > 0.0) || !(tau > 0.0)) throw PreconditionError("li_cross_check needs S > 0 and tau > 0");
  const Box root = chamber_root_box(S);
  CrossCheck cc;
  if (tau >= root.x.hi()) return cc;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> draw_g1(tau, root.x.hi());
  std::uniform_real_distribution<double> draw_g3(tau, root.y.hi());
  const std::uint64_t cap = samples * 1000 + 1000;
  while (cc.feasible < samples && cc.drawn < cap) {
    ++cc.drawn;
    const double g1 = draw_g1(rng);
    const double g3 = draw_g3(rng);
    const auto p = chamber_point(S, g1, g3);
    if (!p) continue;
    const auto [l1, l2, l3, l4] = *p;
    if (l2 - l1 < tau || l3 - l2 < tau || l4 - l3 < tau) continue;
    ++cc.feasible;
    const ExactContext ctx{{Rational::from_double(l1), Rational::from_double(l2), Rational::from_double(l3),
                            Rational::from_double(l4)}};
    const Rational g = frameforms::stated::gamma(ctx);
    for (int i = 1; i <= 4; ++i) {
      // sign of L_i = sign of gamma*L_i / gamma
      if (g.sign() <= 0 || frameforms::stated::gamma_L(ctx, i).sign() >= 0) {
        ++cc.violations;
        break;
      }
    }
  }
  return cc;
}

}  // namespace isocert::certify
