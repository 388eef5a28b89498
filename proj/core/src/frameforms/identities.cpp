#include "isocert/frameforms/identities.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "isocert/frameforms/stated.hpp"

namespace isocert::frameforms {

namespace {

void check_index(int i) {
  if (i < 1 || i > 4) throw PreconditionError("frame index out of range 1..4");
}

std::size_t var(const std::string& name) { return exactalg::frame_symbols()->index(name); }

GapFraction vol_coefficient(const FrameForm& f) { return f.coefficient(kVolume); }

/// Sets every h symbol to zero.
GapFraction drop_h(const GapFraction& x) {
  GapFraction out = x;
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j)
      for (int k = j; k <= 4; ++k) out = out.coefficient_of(var(exactalg::h_name(i, j, k)), 0);
  return out;
}

bool has_pole_at(const GapFraction& x, int a, int b) {
  return x.cancelled().exponents()[static_cast<std::size_t>(GapFraction::pair_index(a, b))] < 0;
}

IdentityReport finish(std::string name, std::string anchor, CurvatureMode mode, const GapFraction& engine,
                      const GapFraction& stated) {
  IdentityReport r;
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  r.mode = mode;
  r.engine = engine.to_ratfn();
  r.stated = stated.to_ratfn();
  r.residual = (engine - stated).to_ratfn();
  return r;
}

void settle(IdentityReport& r) {
  r.pass = r.residual.is_zero() &&
           std::all_of(r.checks.begin(), r.checks.end(), [](const auto& c) { return c.second; });
}

IdentityReport band_identity(const FrameEngine& eng, bool g_family) {
  const auto ctx = eng.context();
  const GapFraction scalar = g_family ? stated::sq(ctx.d(2, 1)) : stated::sq(ctx.d(3, 2));
  const GapFraction m = g_family ? stated::m0(ctx) : stated::m1(ctx);
  const FrameForm ds = eng.scalar_differential(scalar);
  const FrameForm phi = eng.expand(eng.phi());
  const GapFraction engine = vol_coefficient(wedge(ds, phi));

  GapFraction stated_side(eng.table());
  for (int i = 1; i <= 4; ++i) {
    const GapFraction B = g_family ? stated::B_g(ctx, i) : stated::B_f(ctx, i);
    const GapFraction G = g_family ? stated::G_g(ctx, i) : stated::G_f(ctx, i);
    stated_side += (B + G) * stated::sq(ctx.h(4, 4, i));
  }
  IdentityReport r = finish(g_family ? "dg_wedge_Phi" : "df_wedge_Phi", g_family ? "dk7" : "dk9", eng.options().curvature,
                            engine, stated_side);
  const std::string tag = g_family ? "g" : "f";
  r.extracted.emplace_back(g_family ? "m0" : "m1", m.to_ratfn());
  for (int i = 1; i <= 4; ++i) {
    // coefficient of omega_i in the differential is m * h44i
    const GapFraction gi = ds.coefficient(static_cast<WedgeMask>(1u << (i - 1)));
    r.checks.emplace_back(tag + std::to_string(i) + "_equals_" + (g_family ? "m0" : "m1") + "_h44" + std::to_string(i),
                          (gi - m * ctx.h(4, 4, i)).is_zero());
  }
  const std::vector<int> singular = g_family ? std::vector<int>{1, 2} : std::vector<int>{2, 3};
  for (int i : singular) {
    r.extracted.emplace_back("B" + std::to_string(i) + tag,
                             (g_family ? stated::B_g(ctx, i) : stated::B_f(ctx, i)).to_ratfn());
  }
  for (int i = 1; i <= 4; ++i) {
    const GapFraction G = g_family ? stated::G_g(ctx, i) : stated::G_f(ctx, i);
    r.extracted.emplace_back("G" + std::to_string(i) + tag, G.to_ratfn());
    // bounded on the band: no pole along the collapsing gap
    r.checks.emplace_back("G" + std::to_string(i) + tag + (g_family ? "_regular_at_lam1_eq_lam2" : "_regular_at_lam2_eq_lam3"),
                          g_family ? !has_pole_at(G, 1, 2) : !has_pole_at(G, 2, 3));
  }
  settle(r);
  return r;
}

IdentityReport compute(const std::string& name, CurvatureMode mode) {
  const FrameEngine eng(EngineOptions{mode, true});
  const auto ctx = eng.context();
  if (name.size() == 8 && name.rfind("dtheta", 0) == 0) {
    const int i = name[6] - '0';
    const int j = name[7] - '0';
    if (i >= 1 && j <= 4 && i < j) {
      const GapFraction engine = vol_coefficient(eng.exterior_derivative(eng.theta(i, j)));
      IdentityReport r = finish(name, "tf-" + name.substr(6), mode, engine, stated::X(ctx, i, j));
      settle(r);
      return r;
    }
  }
  if (name == "dPhi") {
    const GapFraction engine = vol_coefficient(eng.exterior_derivative(eng.phi()));
    IdentityReport r = finish(name, "form-derivative", mode, engine, stated::dphi(ctx));
    const GapFraction gamma = stated::gamma(ctx);
    for (int i = 1; i <= 4; ++i) {
      const GapFraction Li = engine.coefficient_of(var(exactalg::h_name(4, 4, i)), 2);
      r.extracted.emplace_back("L" + std::to_string(i), Li.to_ratfn());
      r.checks.emplace_back("gamma_L" + std::to_string(i) + "_matches_printed",
                            (Li * gamma - stated::gamma_L(ctx, i)).is_zero());
    }
    r.checks.emplace_back("h_free_part_is_minus_half_scalar_curvature",
                          (drop_h(engine) + stated::scalar_curvature(ctx) / ctx.k(2)).is_zero());
    settle(r);
    return r;
  }
  if (name.size() == 16 && name.rfind("omega", 0) == 0 && name.substr(6) == "_wedge_Phi") {
    const int i = name[5] - '0';
    check_index(i);
    const FrameForm f = wedge(eng.one_form(Generator{i, 0}), eng.expand(eng.phi()));
    IdentityReport r = finish(name, "dk" + std::to_string(i + 1), mode, vol_coefficient(f),
                              stated::bracket(ctx, i) * ctx.h(4, 4, i));
    r.extracted.emplace_back("bracket" + std::to_string(i), stated::bracket(ctx, i).to_ratfn());
    settle(r);
    return r;
  }
  if (name == "dg_wedge_Phi") return band_identity(eng, true);
  if (name == "df_wedge_Phi") return band_identity(eng, false);
  throw PreconditionError("unknown identity '" + name + "'");
}

}  // namespace

DiffForm connection_form(int i, int j, bool reduce_diagonal) {
  const FrameEngine eng(EngineOptions{CurvatureMode::Symbolic, reduce_diagonal});
  return to_diffform(eng.one_form(Generator{i, j == 0 ? -1 : j}));
}

RatFn gauss_component(int i, int j, int k, int l) {
  for (int v : {i, j, k, l}) check_index(v);
  const auto& t = exactalg::frame_symbols();
  int sign = 0;
  if (i != j && i == k && j == l) sign = 1;
  if (i != j && i == l && j == k) sign = -1;
  if (sign == 0) return RatFn(t);
  const MultiPoly li = MultiPoly::variable(t, exactalg::lambda_name(i));
  const MultiPoly lj = MultiPoly::variable(t, exactalg::lambda_name(j));
  return RatFn((MultiPoly(t, Rational(1)) + li * lj) * Rational(sign));
}

RatFn DiagonalRelations::h11i() const { return c1 * RatFn(MultiPoly::variable(c1.table(), exactalg::h_name(4, 4, i))); }
RatFn DiagonalRelations::h22i() const { return c2 * RatFn(MultiPoly::variable(c2.table(), exactalg::h_name(4, 4, i))); }
RatFn DiagonalRelations::h33i() const { return c3 * RatFn(MultiPoly::variable(c3.table(), exactalg::h_name(4, 4, i))); }

DiagonalRelations diagonal_derivative_relations(int i) {
  check_index(i);
  const FrameEngine eng;
  const auto ctx = eng.context();
  DiagonalRelations r;
  r.i = i;
  r.c1 = stated::relation_coefficient(ctx, 1).to_ratfn();
  r.c2 = stated::relation_coefficient(ctx, 2).to_ratfn();
  r.c3 = stated::relation_coefficient(ctx, 3).to_ratfn();
  return r;
}

DiffForm scalar_differential(const MultiPoly& expr) {
  const FrameEngine eng;
  return to_diffform(eng.scalar_differential(GapFraction(expr)));
}

DiffForm exterior_derivative(const FormExpr& form, CurvatureMode mode) {
  const FrameEngine eng(EngineOptions{mode, true});
  return to_diffform(eng.exterior_derivative(form));
}

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names{
      "dtheta12",         "dtheta13",         "dtheta14",         "dtheta23",         "dtheta24",
      "dtheta34",         "dPhi",             "omega1_wedge_Phi", "omega2_wedge_Phi", "omega3_wedge_Phi",
      "omega4_wedge_Phi", "dg_wedge_Phi",     "df_wedge_Phi"};
  return names;
}

IdentityReport verify_identity(const std::string& name, CurvatureMode mode) { return compute(name, mode); }

std::vector<IdentityReport> verify_all(CurvatureMode mode, unsigned threads) {
  const auto& names = identity_names();
  std::vector<IdentityReport> out(names.size());
  if (threads <= 1) {
    for (std::size_t k = 0; k < names.size(); ++k) out[k] = compute(names[k], mode);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(names.size());
  auto worker = [&] {
    for (std::size_t k = next++; k < names.size(); k = next++) {
      try {
        out[k] = compute(names[k], mode);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, names.size()); ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::string to_string(CurvatureMode mode) { return mode == CurvatureMode::Symbolic ? "symbolic" : "expanded"; }

}  // namespace isocert::frameforms
