#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "isocert/errors.hpp"
#include "isocert/frameforms/gap_fraction.hpp"

namespace isocert::frameforms {

/// Strictly increasing subset of {1..4}; bit k-1 stands for omega_k.
using WedgeMask = std::uint8_t;

constexpr WedgeMask kVolume = 0b1111;

/// Sign of omega_a ^ omega_b reordered into increasing order (0 if they overlap).
constexpr int wedge_sign(WedgeMask a, WedgeMask b) {
  if (a & b) return 0;
  int inversions = 0;
  for (int x = 0; x < 4; ++x) {
    if (!((a >> x) & 1)) continue;
    // b-indices below x must move past omega_x
    inversions += std::popcount(static_cast<unsigned>(b & ((1u << x) - 1u)));
  }
  return (inversions % 2) ? -1 : 1;
}

/// Homogeneous exterior form on the coframe omega_1..omega_4 with coefficients in C.
template <class C>
class BasicForm {
 public:
  BasicForm(SymbolTablePtr table, int degree) : table_(std::move(table)), degree_(degree) {
    if (degree < 0 || degree > 4) throw PreconditionError("form degree must lie in 0..4");
  }

  int degree() const noexcept { return degree_; }
  const SymbolTablePtr& table() const noexcept { return table_; }
  const std::map<WedgeMask, C>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of the given basis wedge (zero if absent).
  C coefficient(WedgeMask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C(table_) : it->second;
  }

  void add(WedgeMask m, const C& c) {
    if (std::popcount(static_cast<unsigned>(m)) != degree_) throw PreconditionError("wedge degree mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  BasicForm& operator+=(const BasicForm& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  BasicForm& operator-=(const BasicForm& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend BasicForm operator+(BasicForm a, const BasicForm& b) { return a += b; }
  friend BasicForm operator-(BasicForm a, const BasicForm& b) { return a -= b; }

  BasicForm scaled(const C& s) const {
    BasicForm out(table_, degree_);
    for (const auto& [m, c] : terms_) out.add(m, c * s);
    return out;
  }

  friend BasicForm wedge(const BasicForm& a, const BasicForm& b) {
    if (a.degree_ + b.degree_ > 4) return BasicForm(a.table_, 4);  // vanishes above the top degree
    BasicForm out(a.table_, a.degree_ + b.degree_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        const int s = wedge_sign(ma, mb);
        if (s == 0) continue;
        out.add(static_cast<WedgeMask>(ma | mb), s > 0 ? ca * cb : -(ca * cb));
      }
    }
    return out;
  }

  /// Maps every coefficient through f (e.g. to a different scalar type).
  template <class D, class F>
  BasicForm<D> map(F&& f) const {
    BasicForm<D> out(table_, degree_);
    for (const auto& [m, c] : terms_) out.add(m, f(c));
    return out;
  }

 private:
  void check(const BasicForm& o) const {
    if (o.degree_ != degree_) throw PreconditionError("adding forms of different degree");
  }
  SymbolTablePtr table_;
  int degree_;
  std::map<WedgeMask, C> terms_;
};

using FrameForm = BasicForm<GapFraction>;
using DiffForm = BasicForm<RatFn>;

/// omega_i (j == 0) or the connection form omega_ij.
struct Generator {
  int i = 0;
  int j = 0;
  bool is_coframe() const noexcept { return j == 0; }
  friend bool operator==(const Generator&, const Generator&) = default;
};

struct Word {
  GapFraction coef;
  std::vector<Generator> gens;
};

/// Sum of coefficient * (wedge of generators): the closure of omega_i,
/// omega_ij and lambda-scalars on which d is defined.
class FormExpr {
 public:
  FormExpr(SymbolTablePtr table, int degree) : table_(std::move(table)), degree_(degree) {}

  static FormExpr scalar(const GapFraction& c);
  static FormExpr omega(const SymbolTablePtr& table, int i);
  static FormExpr connection(const SymbolTablePtr& table, int i, int j);
  /// Product of generators with unit coefficient.
  static FormExpr word(const SymbolTablePtr& table, std::vector<Generator> gens);

  int degree() const noexcept { return degree_; }
  const SymbolTablePtr& table() const noexcept { return table_; }
  const std::vector<Word>& words() const noexcept { return words_; }

  FormExpr& operator+=(const FormExpr& o);
  friend FormExpr operator+(FormExpr a, const FormExpr& b) { return a += b; }
  FormExpr scaled(const GapFraction& s) const;
  friend FormExpr wedge(const FormExpr& a, const FormExpr& b);

  void push(Word w);

 private:
  SymbolTablePtr table_;
  int degree_;
  std::vector<Word> words_;
};

enum class CurvatureMode { Symbolic, Expanded };

struct EngineOptions {
  CurvatureMode curvature = CurvatureMode::Symbolic;
  /// Eliminate h_jji (j = 1, 2, 3) through the power-sum relations.
  bool reduce_diagonal = true;
};

/// Rewriting engine for the moving-frame computation on the set of simple
/// principal curvatures, over the frame symbol table.
class FrameEngine {
 public:
  explicit FrameEngine(EngineOptions options = {});

  const SymbolTablePtr& table() const noexcept { return table_; }
  const EngineOptions& options() const noexcept { return options_; }

  GapFraction lambda(int i) const;
  /// h_ijk in the engine basis (diagonal family eliminated when requested).
  GapFraction h(int i, int j, int k) const;
  /// R_ijij as a symbol or as 1 + lam_i lam_j.
  GapFraction curvature(int i, int j) const;

  /// Expansion of omega_i or omega_ij in the coframe.
  FrameForm one_form(const Generator& g) const;
  FrameForm expand(const FormExpr& f) const;

  /// d of a lambda-scalar: sum_i (sum_j d/dlam_j * h_jji) omega_i.
  FrameForm scalar_differential(const GapFraction& s) const;
  /// d by the structure equations, as a generator expression.
  FormExpr d(const FormExpr& f) const;
  /// Top-degree forms are closed; their derivative is returned as the zero 4-form.
  FrameForm exterior_derivative(const FormExpr& f) const {
    return f.degree() >= 4 ? FrameForm(table_, 4) : expand(d(f));
  }

  /// theta_ij as fixed by the orientation convention, i < j.
  FormExpr theta(int i, int j) const;
  FormExpr phi() const;

  /// Scalar context for the stated formulas.
  struct Context {
    const FrameEngine* engine;
    GapFraction d(int i, int j) const { return GapFraction::difference(engine->table(), i, j); }
    GapFraction h(int i, int j, int k) const { return engine->h(i, j, k); }
    GapFraction R(int i, int j) const { return engine->curvature(i, j); }
    GapFraction k(long v) const { return GapFraction(engine->table(), Rational(v)); }
  };
  Context context() const { return Context{this}; }

 private:
  SymbolTablePtr table_;
  EngineOptions options_;
};

/// Converts a frame form to exact rational-function coefficients.
DiffForm to_diffform(const FrameForm& f);

}  // namespace isocert::frameforms
