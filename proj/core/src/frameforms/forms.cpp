#include "isocert/frameforms/forms.hpp"

#include <algorithm>
#include <array>

#include "isocert/frameforms/stated.hpp"

namespace isocert::frameforms {

namespace {

std::uint32_t lambda_mask(const SymbolTablePtr& t) {
  std::uint32_t m = 0;
  for (int i = 1; i <= 4; ++i) m |= 1u << t->index(exactalg::lambda_name(i));
  return m;
}

void check_index(int i) {
  if (i < 1 || i > 4) throw PreconditionError("frame index out of range 1..4");
}

}  // namespace

FormExpr FormExpr::scalar(const GapFraction& c) {
  FormExpr f(c.table(), 0);
  f.push(Word{c, {}});
  return f;
}

FormExpr FormExpr::omega(const SymbolTablePtr& table, int i) {
  check_index(i);
  return word(table, {Generator{i, 0}});
}

FormExpr FormExpr::connection(const SymbolTablePtr& table, int i, int j) {
  check_index(i);
  check_index(j);
  if (i == j) throw PreconditionError("omega_ii is not a connection form of the frame");
  return word(table, {Generator{i, j}});
}

FormExpr FormExpr::word(const SymbolTablePtr& table, std::vector<Generator> gens) {
  FormExpr f(table, static_cast<int>(gens.size()));
  f.push(Word{GapFraction(table, Rational(1)), std::move(gens)});
  return f;
}

void FormExpr::push(Word w) {
  if (static_cast<int>(w.gens.size()) != degree_) throw PreconditionError("word degree mismatch");
  if (w.coef.is_zero()) return;
  words_.push_back(std::move(w));
}

FormExpr& FormExpr::operator+=(const FormExpr& o) {
  if (o.degree_ != degree_) throw PreconditionError("adding forms of different degree");
  for (const auto& w : o.words_) words_.push_back(w);
  return *this;
}

FormExpr FormExpr::scaled(const GapFraction& s) const {
  FormExpr out(table_, degree_);
  for (const auto& w : words_) out.push(Word{w.coef * s, w.gens});
  return out;
}

FormExpr wedge(const FormExpr& a, const FormExpr& b) {
  FormExpr out(a.table_, a.degree_ + b.degree_);
  for (const auto& wa : a.words_) {
    for (const auto& wb : b.words_) {
      std::vector<Generator> g = wa.gens;
      g.insert(g.end(), wb.gens.begin(), wb.gens.end());
      out.push(Word{wa.coef * wb.coef, std::move(g)});
    }
  }
  return out;
}

FrameEngine::FrameEngine(EngineOptions options) : table_(exactalg::frame_symbols()), options_(options) {}

GapFraction FrameEngine::lambda(int i) const {
  check_index(i);
  return GapFraction(MultiPoly::variable(table_, exactalg::lambda_name(i)));
}

GapFraction FrameEngine::h(int i, int j, int k) const {
  check_index(i);
  check_index(j);
  check_index(k);
  std::array<int, 3> idx{i, j, k};
  std::sort(idx.begin(), idx.end());
  auto symbol = [&](int a, int b, int c) {
    return GapFraction(MultiPoly::variable(table_, exactalg::h_name(a, b, c)));
  };
  if (!options_.reduce_diagonal) return symbol(idx[0], idx[1], idx[2]);
  int repeated = 0;
  int other = 0;
  if (idx[0] == idx[1]) {
    repeated = idx[0];
    other = idx[2];
  } else if (idx[1] == idx[2]) {
    repeated = idx[1];
    other = idx[0];
  }
  if (repeated == 0 || repeated == 4) return symbol(idx[0], idx[1], idx[2]);
  // h_{jj m} = c_j h_{44 m}
  return stated::relation_coefficient(context(), repeated) * symbol(std::min(other, 4), 4, 4);
}

GapFraction FrameEngine::curvature(int i, int j) const {
  check_index(i);
  check_index(j);
  if (i == j) throw PreconditionError("R_iiii is not used");
  if (options_.curvature == CurvatureMode::Symbolic) {
    return GapFraction(MultiPoly::variable(table_, exactalg::curvature_name(i, j)));
  }
  return GapFraction(table_, Rational(1)) + lambda(i) * lambda(j);
}

FrameForm FrameEngine::one_form(const Generator& g) const {
  FrameForm out(table_, 1);
  check_index(g.i);
  if (g.is_coframe()) {
    out.add(static_cast<WedgeMask>(1u << (g.i - 1)), GapFraction(table_, Rational(1)));
    return out;
  }
  check_index(g.j);
  if (g.i == g.j) throw PreconditionError("omega_ii is not a connection form of the frame");
  const GapFraction inv = GapFraction::difference(table_, g.i, g.j, -1);
  for (int k = 1; k <= 4; ++k) out.add(static_cast<WedgeMask>(1u << (k - 1)), h(g.i, g.j, k) * inv);
  return out;
}

FrameForm FrameEngine::expand(const FormExpr& f) const {
  FrameForm total(table_, f.degree());
  for (const auto& w : f.words()) {
    FrameForm acc(table_, 0);
    acc.add(0, w.coef);
    for (const auto& g : w.gens) {
      acc = wedge(acc, one_form(g));
      if (acc.is_zero()) break;
    }
    if (!acc.is_zero()) total += acc;
  }
  return total;
}

FrameForm FrameEngine::scalar_differential(const GapFraction& s) const {
  if ((s.num().variable_mask() & ~lambda_mask(table_)) != 0) {
    throw PreconditionError("scalar differential needs a function of the principal curvatures only");
  }
  FrameForm out(table_, 1);
  for (int j = 1; j <= 4; ++j) {
    const GapFraction dj = s.partial_lambda(j);
    if (dj.is_zero()) continue;
    for (int i = 1; i <= 4; ++i) out.add(static_cast<WedgeMask>(1u << (i - 1)), dj * h(j, j, i));
  }
  return out;
}

FormExpr FrameEngine::d(const FormExpr& f) const {
  FormExpr out(table_, f.degree() + 1);
  const std::uint32_t lmask = lambda_mask(table_);
  auto with = [](const std::vector<Generator>& gens, std::size_t m, std::initializer_list<Generator> repl) {
    std::vector<Generator> g(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(m));
    g.insert(g.end(), repl);
    g.insert(g.end(), gens.begin() + static_cast<std::ptrdiff_t>(m) + 1, gens.end());
    return g;
  };
  for (const auto& w : f.words()) {
    if (!w.coef.num().is_constant() || std::any_of(w.coef.exponents().begin(), w.coef.exponents().end(),
                                                   [](int e) { return e != 0; })) {
      if ((w.coef.num().variable_mask() & ~lmask) != 0) {
        throw PreconditionError("d is defined only for lambda-scalar coefficients");
      }
      const FrameForm ds = scalar_differential(w.coef);
      for (const auto& [mask, c] : ds.terms()) {
        std::vector<Generator> g{Generator{std::countr_zero(static_cast<unsigned>(mask)) + 1, 0}};
        g.insert(g.end(), w.gens.begin(), w.gens.end());
        out.push(Word{c, std::move(g)});
      }
    }
    for (std::size_t m = 0; m < w.gens.size(); ++m) {
      const GapFraction c = (m % 2 == 0) ? w.coef : -w.coef;
      const Generator g = w.gens[m];
      if (g.is_coframe()) {
        // d omega_i = sum_j omega_ij ^ omega_j
        for (int j = 1; j <= 4; ++j) {
          if (j != g.i) out.push(Word{c, with(w.gens, m, {Generator{g.i, j}, Generator{j, 0}})});
        }
      } else {
        // d omega_ij = sum_k omega_ik ^ omega_kj - R_ijij omega_i ^ omega_j
        for (int k = 1; k <= 4; ++k) {
          if (k != g.i && k != g.j) out.push(Word{c, with(w.gens, m, {Generator{g.i, k}, Generator{k, g.j}})});
        }
        out.push(Word{-(c * curvature(g.i, g.j)), with(w.gens, m, {Generator{g.i, 0}, Generator{g.j, 0}})});
      }
    }
  }
  return out;
}

FormExpr FrameEngine::theta(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto w = [&](int a, int b) {
    return FormExpr::word(table_, {Generator{a, 0}, Generator{b, 0}, Generator{i, j}});
  };
  switch (10 * i + j) {
    case 12: return w(3, 4);
    case 13: return w(4, 2);
    case 14: return w(2, 3);
    case 23: return w(1, 4);
    case 24: return w(3, 1);
    case 34: return w(1, 2);
    default: throw PreconditionError("theta_ij needs distinct indices in 1..4");
  }
}

FormExpr FrameEngine::phi() const {
  FormExpr out(table_, 3);
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) out += theta(i, j);
  return out;
}

DiffForm to_diffform(const FrameForm& f) {
  return f.map<RatFn>([](const GapFraction& c) { return c.to_ratfn(); });
}

}  // namespace isocert::frameforms
