#include <array>
#include <cmath>
#include <sstream>

#include "bnb.hpp"
#include "isocert/certify/certify.hpp"
#include "isocert/errors.hpp"
#include "isocert/frameforms/forms.hpp"
#include "isocert/frameforms/stated.hpp"

namespace isocert::certify {

namespace {

using frameforms::GapFraction;

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Claim { NonnegBounded, NonposBounded, Nonpos, Bounded };

struct Quantity {
  std::string name;
  bool g_family = true;
  Claim claim = Claim::Bounded;
  GapFraction value;
};

Quantity make_quantity(const std::string& name) {
  const frameforms::FrameEngine eng;
  const auto ctx = eng.context();
  namespace st = frameforms::stated;
  if (name == "m0") return {name, true, Claim::NonnegBounded, st::m0(ctx)};
  if (name == "m1") return {name, false, Claim::NonposBounded, st::m1(ctx)};
  if (name == "B1g") return {name, true, Claim::Nonpos, st::B_g(ctx, 1)};
  if (name == "B2g") return {name, true, Claim::Nonpos, st::B_g(ctx, 2)};
  if (name == "B2f") return {name, false, Claim::Nonpos, st::B_f(ctx, 2)};
  if (name == "B3f") return {name, false, Claim::Nonpos, st::B_f(ctx, 3)};
  if (name.size() == 3 && name[0] == 'G' && name[1] >= '1' && name[1] <= '4' && (name[2] == 'g' || name[2] == 'f')) {
    const int i = name[1] - '0';
    return name[2] == 'g' ? Quantity{name, true, Claim::Bounded, st::G_g(ctx, i)}
                          : Quantity{name, false, Claim::Bounded, st::G_f(ctx, i)};
  }
  throw PreconditionError("unknown band quantity '" + name + "'");
}

/// The quantity as num(g1, g2, g3) * prod_p (lam_j - lam_i)^{e_p}, translated to lam1 = 0.
struct GapForm {
  MultiPoly num;
  std::array<int, GapFraction::kPairs> exps{};
  std::array<std::pair<int, int>, GapFraction::kPairs> pairs{};
};

GapForm to_gap_form(const GapFraction& q) {
  const GapFraction c = q.cancelled();
  const auto& frame = c.table();
  const auto gaps = exactalg::SymbolTable::make({"g1", "g2", "g3"});
  std::vector<MultiPoly> images(frame->size(), MultiPoly(gaps));
  const MultiPoly g1 = MultiPoly::variable(gaps, "g1");
  const MultiPoly g2 = MultiPoly::variable(gaps, "g2");
  const MultiPoly g3 = MultiPoly::variable(gaps, "g3");
  images[frame->index(exactalg::lambda_name(2))] = g1;
  images[frame->index(exactalg::lambda_name(3))] = g1 + g2;
  images[frame->index(exactalg::lambda_name(4))] = g1 + g2 + g3;
  GapForm f{c.num().compose(gaps, images), {}, {}};
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      const int p = GapFraction::pair_index(i, j);
      f.exps[static_cast<std::size_t>(p)] = c.exponents()[static_cast<std::size_t>(p)];
      f.pairs[static_cast<std::size_t>(p)] = {i, j};
    }
  }
  return f;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

const std::vector<std::string>& band_quantities() {
  static const std::vector<std::string> names{"m0",  "B1g", "B2g", "G1g", "G2g", "G3g", "G4g",
                                              "m1",  "B2f", "B3f", "G1f", "G2f", "G3f", "G4f"};
  return names;
}

Certificate certify_band_bounds(const std::string& quantity, double S, double eps0, double delta1,
                                const BandOptions& options) {
  if (!(delta1 > 0.0) || !(delta1 < eps0)) throw PreconditionError("band bounds need 0 < delta1 < eps0");
  if (!(S >= 0.0)) throw PreconditionError("band bounds need S >= 0");
  const Quantity q = make_quantity(quantity);
  const GapForm form = to_gap_form(q.value);

  Certificate cert;
  cert.claim = [&] {
    switch (q.claim) {
      case Claim::NonnegBounded: return "0 <= " + q.name + " <= C";
      case Claim::NonposBounded: return "-C <= " + q.name + " <= 0";
      case Claim::Nonpos: return q.name + " <= 0";
      default: return "|" + q.name + "| <= C";
    }
  }();
  const std::string small = q.g_family ? "g" : "f";
  const std::string large = q.g_family ? "f" : "g";
  std::optional<double> floor = options.a3_floor;
  if (!floor && !options.a3 && !q.g_family) floor = 0.0;
  cert.region = "0 < " + small + " < " + fmt(delta1) + ", " + large + " >= " + fmt(eps0) +
                ", sum lam = 0, sum lam^2 = " + fmt(S) + ", lam1 <= lam2 <= lam3 <= lam4" +
                (options.a3 ? ", sum lam^3 = " + fmt(*options.a3) : "") +
                (floor ? ", sum lam^3 >= " + fmt(*floor) : "");
  if (S == 0.0) {
    cert.status = Status::Proved;
    cert.note = "region is empty: S = 0 forces all gaps to vanish";
    cert.values = {{"C", 0.0}};
    return cert;
  }

  GapFloors floors;
  const double small_cap = sqrt(Interval(delta1)).hi();
  const double large_floor = sqrt(Interval(eps0)).lo();
  if (q.g_family) {
    floors.g1_cap = small_cap;
    floors.g2 = large_floor;
  } else {
    floors.g2_cap = small_cap;
    floors.g1 = large_floor;
  }
  const bool bounded = q.claim != Claim::Nonpos;
  const int sign_needed = q.claim == Claim::NonnegBounded ? 1 : (q.claim == Claim::Bounded ? 0 : -1);

  auto eval = [&](const detail::Tagged& t, int) {
    detail::CellResult r;
    const auto cell = chamber_cell(S, t.box, floors);
    if (!cell) {
      r.verdict = detail::Verdict::Empty;
      return r;
    }
    if (options.a3 || floor) {
      Interval p3(0.0);
      for (const auto& l : cell->lam) p3 += pow(l, 3);
      if (options.a3 && !p3.contains(*options.a3)) {
        r.verdict = detail::Verdict::Empty;
        return r;
      }
      if (floor && p3.hi() < *floor) {
        r.verdict = detail::Verdict::Empty;
        return r;
      }
    }
    const std::array<Interval, 3> g{cell->g1, cell->g2, cell->g3};
    const Interval num = interval_eval(form.num, {{"g1", g[0]}, {"g2", g[1]}, {"g3", g[2]}});
    // every lam_j - lam_i (i < j) is positive on the open region
    bool sign_ok = true;
    if (sign_needed > 0) sign_ok = num.lo() >= 0.0;
    if (sign_needed < 0) sign_ok = num.hi() <= 0.0;
    double bound = 0.0;
    if (bounded) {
      Interval v = num;
      for (std::size_t p = 0; p < form.exps.size(); ++p) {
        const int e = form.exps[p];
        if (e == 0) continue;
        const auto [i, j] = form.pairs[p];
        Interval d = g[static_cast<std::size_t>(i - 1)];
        for (int k = i; k < j - 1; ++k) d += g[static_cast<std::size_t>(k)];
        if (e > 0) {
          v *= pow(d, static_cast<unsigned>(e));
        } else if (d.contains_zero()) {
          r.verdict = detail::Verdict::Undecided;  // possible pole: subdivide
          return r;
        } else {
          v = v / pow(d, static_cast<unsigned>(-e));
        }
      }
      bound = v.mag();
    }
    r.verdict = sign_ok ? detail::Verdict::Resolved : detail::Verdict::Undecided;
    r.maxima = {bound, sign_needed > 0 ? -num.lo() : (sign_needed < 0 ? num.hi() : -kInf), 1.0};
    return r;
  };
  const auto out = detail::run({detail::Tagged{chamber_root_box(S), 0}}, options.max_depth,
                               std::min(options.min_depth, options.max_depth), 3, options.threads, eval);

  cert.cells_processed = out.cells;
  cert.max_depth = out.depth;
  for (const auto& u : out.undecided) cert.offending.push_back(u.box);
  cert.offending_total = out.undecided_total;
  cert.status = out.undecided_total ? Status::Inconclusive : Status::Proved;
  const bool nonempty = out.maxima[2] > 0.0;
  const double C = nonempty ? out.maxima[0] : 0.0;
  if (bounded) {
    cert.values = {{"C", C}};
    cert.margin_achieved = C;
  } else {
    cert.margin_achieved = nonempty ? -out.maxima[1] : 0.0;
  }
  cert.note = std::string(bounded ? "margin_achieved is the certified constant C" : "margin_achieved bounds the numerator away from 0") +
              (nonempty ? "" : "; region is empty at this subdivision") +
              "; the sign of the quantity is the sign of its numerator in the gaps, the gap factors being positive";
  return cert;
}

}  // namespace isocert::certify
