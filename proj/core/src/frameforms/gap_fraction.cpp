#include "isocert/frameforms/gap_fraction.hpp"

#include <algorithm>

#include "isocert/errors.hpp"

namespace isocert::frameforms {

namespace {

constexpr std::array<std::pair<int, int>, GapFraction::kPairs> kPairList{
    {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

MultiPoly lam(const SymbolTablePtr& t, int i) { return MultiPoly::variable(t, exactalg::lambda_name(i)); }

}  // namespace

GapFraction::GapFraction(SymbolTablePtr table) : num_(std::move(table)) {}

GapFraction::GapFraction(MultiPoly num, Exponents e) : num_(std::move(num)), e_(e) {
  if (num_.is_zero()) e_ = {};
}

GapFraction::GapFraction(SymbolTablePtr table, const Rational& c) : num_(std::move(table), c) {}

int GapFraction::pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  for (int p = 0; p < kPairs; ++p) {
    if (kPairList[p].first == i && kPairList[p].second == j) return p;
  }
  throw PreconditionError("gap pair needs distinct indices in 1..4");
}

MultiPoly GapFraction::gap_poly(const SymbolTablePtr& table, int p) {
  return lam(table, kPairList.at(static_cast<std::size_t>(p)).second) -
         lam(table, kPairList.at(static_cast<std::size_t>(p)).first);
}

GapFraction GapFraction::difference(const SymbolTablePtr& table, int a, int b, int power) {
  const int p = pair_index(a, b);
  Exponents e{};
  e[p] = power;
  // lam_a - lam_b = -(lam_b - lam_a) when a < b
  const bool flip = a < b && (power % 2 != 0);
  return GapFraction(MultiPoly(table, Rational(flip ? -1 : 1)), e);
}

GapFraction& GapFraction::operator+=(const GapFraction& o) {
  if (!exactalg::same_table(table(), o.table())) throw SymbolTableMismatch("gap fractions over different tables");
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (e_ == o.e_) {
    num_ += o.num_;
    if (num_.is_zero()) e_ = {};
    return *this;
  }
  Exponents m{};
  MultiPoly fa(table(), Rational(1));
  MultiPoly fb(table(), Rational(1));
  for (int p = 0; p < kPairs; ++p) {
    m[p] = std::min(e_[p], o.e_[p]);
    if (e_[p] > m[p]) fa *= gap_poly(table(), p).pow(static_cast<unsigned>(e_[p] - m[p]));
    if (o.e_[p] > m[p]) fb *= gap_poly(table(), p).pow(static_cast<unsigned>(o.e_[p] - m[p]));
  }
  num_ = num_ * fa + o.num_ * fb;
  e_ = num_.is_zero() ? Exponents{} : m;
  return *this;
}

GapFraction& GapFraction::operator-=(const GapFraction& o) { return *this += -o; }

GapFraction& GapFraction::operator*=(const GapFraction& o) {
  num_ *= o.num_;
  if (num_.is_zero()) {
    e_ = {};
    return *this;
  }
  for (int p = 0; p < kPairs; ++p) e_[p] += o.e_[p];
  return *this;
}

GapFraction& GapFraction::operator/=(const GapFraction& o) {
  const GapFraction d = o.num_.is_constant() ? o : o.cancelled();
  if (d.is_zero()) throw DivisionByZero("division by zero gap fraction");
  if (!d.num_.is_constant()) throw PreconditionError("divisor is not a product of curvature gaps");
  num_ *= Rational(1) / d.num_.constant_value();
  if (num_.is_zero()) return *this;
  for (int p = 0; p < kPairs; ++p) e_[p] -= d.e_[p];
  return *this;
}

GapFraction GapFraction::operator-() const { return GapFraction(-num_, e_); }

GapFraction GapFraction::partial_lambda(int j) const {
  const std::size_t var = table()->index(exactalg::lambda_name(j));
  GapFraction out(num_.derivative(var), e_);
  for (int p = 0; p < kPairs; ++p) {
    if (e_[p] == 0) continue;
    int s = 0;
    if (kPairList[p].second == j) s = 1;
    if (kPairList[p].first == j) s = -1;
    if (s == 0) continue;
    Exponents e = e_;
    e[p] -= 1;
    out += GapFraction(num_ * Rational(static_cast<long>(s * e_[p])), e);
  }
  return out;
}

GapFraction GapFraction::coefficient_of(std::size_t var, unsigned power) const {
  const auto c = num_.coefficients_in(var);
  if (power >= c.size()) return GapFraction(table());
  return GapFraction(c[power], e_);
}

GapFraction GapFraction::cancelled() const {
  GapFraction out = *this;
  if (out.is_zero()) return out;
  for (int p = 0; p < kPairs; ++p) {
    if (out.e_[p] >= 0) continue;
    const MultiPoly g = gap_poly(table(), p);
    while (out.e_[p] < 0) {
      auto q = out.num_.divide_exact(g);
      if (!q) break;
      out.num_ = std::move(*q);
      ++out.e_[p];
    }
  }
  return out;
}

RatFn GapFraction::to_ratfn() const {
  if (is_zero()) return RatFn(table());
  const GapFraction c = cancelled();
  MultiPoly num = c.num_;
  MultiPoly den(table(), Rational(1));
  for (int p = 0; p < kPairs; ++p) {
    if (c.e_[p] > 0) num *= gap_poly(table(), p).pow(static_cast<unsigned>(c.e_[p]));
    if (c.e_[p] < 0) den *= gap_poly(table(), p).pow(static_cast<unsigned>(-c.e_[p]));
  }
  return RatFn::from_coprime(num, den);
}

Rational GapFraction::evaluate(std::span<const Rational> values) const {
  const GapFraction c = cancelled();
  Rational v = c.num_.evaluate(values);
  for (int p = 0; p < kPairs; ++p) {
    if (c.e_[p] == 0) continue;
    const Rational g = gap_poly(table(), p).evaluate(values);
    if (g.is_zero() && c.e_[p] < 0) {
      throw PoleError(exactalg::lambda_name(kPairList[p].second) + " - " + exactalg::lambda_name(kPairList[p].first));
    }
    v *= g.pow(c.e_[p]);
  }
  return v;
}

}  // namespace isocert::frameforms
