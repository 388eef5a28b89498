#include "isocert/exactalg/ratfn.hpp"

#include <vector>

#include "isocert/errors.hpp"

namespace isocert::exactalg {

namespace {

bool is_one(const MultiPoly& p) { return p.is_constant() && !p.is_zero() && p.constant_value().is_one(); }

}  // namespace

RatFn::RatFn(SymbolTablePtr table) : num_(table), den_(table, Rational(1)) {}

RatFn::RatFn(SymbolTablePtr table, const Rational& c) : num_(table, c), den_(table, Rational(1)) {}

RatFn::RatFn(const MultiPoly& num) : num_(num), den_(num.table(), Rational(1)) {}

void RatFn::normalize_scalars() {
  if (num_.is_zero()) {
    den_ = MultiPoly(den_.table(), Rational(1));
    return;
  }
  const MultiPoly prim = den_.primitive();
  const Rational scale = prim.leading().coef / den_.leading().coef;
  if (!scale.is_one()) num_ *= scale;
  den_ = prim;
}

RatFn RatFn::reduce(const MultiPoly& num, const MultiPoly& den) {
  if (!same_table(num.table(), den.table())) throw SymbolTableMismatch("rational function over different tables");
  if (den.is_zero()) throw DivisionByZero("division by zero polynomial");
  if (num.is_zero()) return RatFn(num.table());
  if (den.is_constant()) return RatFn(num * (Rational(1) / den.constant_value()));
  const MultiPoly g = gcd(num, den);
  RatFn r(num, den, 0);
  if (!g.is_constant()) {
    r.num_ = num.exact_quotient(g);
    r.den_ = den.exact_quotient(g);
  }
  r.normalize_scalars();
  return r;
}

RatFn RatFn::from_coprime(const MultiPoly& num, const MultiPoly& den) {
  if (!same_table(num.table(), den.table())) throw SymbolTableMismatch("rational function over different tables");
  if (den.is_zero()) throw DivisionByZero("division by zero polynomial");
  RatFn r(num, den, 0);
  r.normalize_scalars();
  return r;
}

RatFn& RatFn::operator+=(const RatFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    // same normalized denominator: only the sum can share factors with it
    MultiPoly n = num_ + o.num_;
    *this = den_.is_constant() ? RatFn(n) : reduce(n, den_);
    return *this;
  }
  const MultiPoly g = gcd(den_, o.den_);
  if (g.is_constant()) {
    MultiPoly n = num_ * o.den_ + o.num_ * den_;
    *this = from_coprime(n, den_ * o.den_);
    return *this;
  }
  const MultiPoly b1 = den_.exact_quotient(g);
  const MultiPoly d1 = o.den_.exact_quotient(g);
  const MultiPoly t = num_ * d1 + o.num_ * b1;
  if (t.is_zero()) return *this = RatFn(table());
  const MultiPoly g2 = gcd(t, g);
  if (g2.is_constant()) {
    *this = from_coprime(t, b1 * o.den_);
  } else {
    *this = from_coprime(t.exact_quotient(g2), b1 * o.den_.exact_quotient(g2));
  }
  return *this;
}

RatFn& RatFn::operator-=(const RatFn& o) { return *this += -o; }

RatFn& RatFn::operator*=(const RatFn& o) {
  if (is_zero() || o.is_zero()) return *this = RatFn(table());
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ *= o.num_;
    return *this;
  }
  MultiPoly a = num_;
  MultiPoly b = den_;
  MultiPoly c = o.num_;
  MultiPoly d = o.den_;
  if (!is_one(d)) {
    const MultiPoly g1 = gcd(a, d);
    if (!g1.is_constant()) {
      a = a.exact_quotient(g1);
      d = d.exact_quotient(g1);
    }
  }
  if (!is_one(b)) {
    const MultiPoly g2 = gcd(c, b);
    if (!g2.is_constant()) {
      c = c.exact_quotient(g2);
      b = b.exact_quotient(g2);
    }
  }
  *this = from_coprime(a * c, b * d);
  return *this;
}

RatFn& RatFn::operator/=(const RatFn& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero rational function");
  RatFn inv(o.den_, o.num_, 0);
  inv.normalize_scalars();
  return *this *= inv;
}

RatFn RatFn::operator-() const {
  RatFn r(*this);
  r.num_ = -r.num_;
  return r;
}

bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

RatFn RatFn::pow(int e) const {
  if (e < 0) return RatFn(table(), Rational(1)) / pow(-e);
  RatFn r(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), 0);
  r.normalize_scalars();
  return r;
}

RatFn RatFn::derivative(std::size_t var) const {
  const MultiPoly n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
  return reduce(n, den_ * den_);
}

void RatFn::throw_pole(std::span<const Rational> values) const {
  const auto& t = *table();
  const std::uint32_t mask = den_.variable_mask();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!((mask >> i) & 1u)) continue;
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (!((mask >> j) & 1u) || values[i] != values[j]) continue;
      const MultiPoly f = MultiPoly::variable(table(), i) - MultiPoly::variable(table(), j);
      if (den_.divide_exact(f)) throw PoleError(t.name(i) + " - " + t.name(j));
    }
    const MultiPoly f = MultiPoly::variable(table(), i) - MultiPoly(table(), values[i]);
    if (den_.divide_exact(f)) {
      throw PoleError(values[i].is_zero() ? t.name(i) : t.name(i) + " - " + values[i].to_string());
    }
  }
  throw PoleError(den_.to_string());
}

Rational RatFn::evaluate(std::span<const Rational> values) const {
  const Rational d = den_.evaluate(values);
  if (d.is_zero()) throw_pole(values);
  return num_.evaluate(values) / d;
}

Rational RatFn::evaluate(const std::map<std::string, Rational>& point) const {
  const auto& t = *table();
  const std::uint32_t mask = variable_mask();
  std::vector<Rational> values(t.size(), Rational(0));
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto it = point.find(t.name(i));
    if (it != point.end()) {
      values[i] = it->second;
    } else if ((mask >> i) & 1u) {
      throw UnboundSymbol(t.name(i));
    }
  }
  return evaluate(values);
}

RatFn RatFn::substitute(std::size_t var, const RatFn& image) const {
  if (!num_.depends_on(var) && !den_.depends_on(var)) return *this;
  // p(x -> a/b) = P(a, b) / b^deg p, homogenized in the substituted variable
  auto homogenize = [&](const MultiPoly& p, unsigned deg) {
    const auto coeffs = p.coefficients_in(var);
    MultiPoly acc(table());
    MultiPoly apow(table(), Rational(1));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (!coeffs[k].is_zero()) acc += coeffs[k] * apow * image.den_.pow(deg - static_cast<unsigned>(k));
      apow *= image.num_;
    }
    return acc;
  };
  const unsigned dn = num_.degree_in(var);
  const unsigned dd = den_.degree_in(var);
  const unsigned d = std::max(dn, dd);
  MultiPoly n = homogenize(num_, dn) * image.den_.pow(d - dn);
  MultiPoly m = homogenize(den_, dd) * image.den_.pow(d - dd);
  return reduce(n, m);
}

RatFn RatFn::compose(const SymbolTablePtr& target, std::span<const RatFn> images) const {
  if (images.size() != table()->size()) throw PreconditionError("compose needs one image per symbol");
  // common denominator of the images used here
  const std::uint32_t mask = variable_mask();
  MultiPoly common(target, Rational(1));
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (((mask >> i) & 1u) && !images[i].den_.is_constant()) {
      const MultiPoly g = gcd(common, images[i].den_);
      common *= images[i].den_.exact_quotient(g);
    }
  }
  std::vector<MultiPoly> lifted;
  lifted.reserve(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!((mask >> i) & 1u)) {
      lifted.emplace_back(target);
      continue;
    }
    lifted.push_back(images[i].num_ * common.exact_quotient(images[i].den_));
  }
  // each symbol becomes lifted/common; homogenize by total degree
  const unsigned d = std::max(num_.total_degree(), den_.total_degree());
  std::vector<MultiPoly> cpow{MultiPoly(target, Rational(1))};
  auto lift = [&](const MultiPoly& p) {
    MultiPoly acc(target);
    for (const auto& t : p.terms()) {
      MultiPoly v(target, t.coef);
      for (std::size_t i = 0; i < images.size(); ++i) {
        if (t.mono.exp[i] != 0) v *= lifted[i].pow(t.mono.exp[i]);
      }
      const unsigned missing = d - t.mono.degree;
      while (cpow.size() <= missing) cpow.push_back(cpow.back() * common);
      acc += v * cpow[missing];
    }
    return acc;
  };
  return reduce(lift(num_), lift(den_));
}

std::string RatFn::to_string() const {
  if (is_one(den_)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace isocert::exactalg
