#include "isocert/exactalg/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "isocert/errors.hpp"

namespace isocert::exactalg {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::from_multipoly(const MultiPoly& p, std::size_t var) {
  if ((p.variable_mask() & ~(1u << var)) != 0) throw PreconditionError("polynomial is not univariate");
  std::vector<Rational> c(p.degree_in(var) + 1);
  for (const auto& t : p.terms()) c[t.mono[var]] = t.coef;
  return UPoly(std::move(c));
}

const Rational& UPoly::leading() const {
  if (c_.empty()) throw PreconditionError("zero polynomial has no leading coefficient");
  return c_.back();
}

Rational UPoly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  return *this * (Rational(1) / c_.back());
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const Rational& s) {
  std::vector<Rational> c(a.c_);
  for (auto& v : c) v *= s;
  return UPoly(std::move(c));
}

UPoly UPoly::operator-() const { return *this * Rational(-1); }

UPoly UPoly::pow(unsigned e) const {
  UPoly r = constant(Rational(1));
  for (unsigned k = 0; k < e; ++k) r = r * *this;
  return r;
}

UPoly UPoly::compose(const UPoly& q) const {
  UPoly acc;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * q + constant(c_[k]);
  return acc;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DivisionByZero("univariate division by zero");
  std::vector<Rational> r = a.c_;
  const int db = b.degree();
  if (a.degree() < db) return {UPoly{}, a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv = Rational(1) / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational f = r[static_cast<std::size_t>(k)] * inv;
    q[static_cast<std::size_t>(k - db)] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const Rational mag = c.abs();
    if (k == 0) {
      os << mag.to_string();
      continue;
    }
    if (!mag.is_one()) os << mag.to_string() << '*';
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = UPoly::divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  const UPoly g = gcd(p, p.derivative());
  return UPoly::divmod(p, g).first.monic();
}

std::vector<UPoly> squarefree_decomposition(const UPoly& p) {
  if (p.is_zero()) throw PreconditionError("squarefree decomposition of zero");
  std::vector<UPoly> out;
  if (p.degree() == 0) return out;
  // Yun's algorithm
  const UPoly dp = p.derivative();
  UPoly a = gcd(p, dp);
  UPoly b = UPoly::divmod(p, a).first;
  UPoly c = UPoly::divmod(dp, a).first;
  UPoly d = c - b.derivative();
  while (b.degree() > 0) {
    const UPoly f = gcd(b, d);
    out.push_back(f);
    b = UPoly::divmod(b, f).first;
    c = UPoly::divmod(d, f).first;
    d = c - b.derivative();
  }
  return out;
}

std::vector<UPoly> sturm_chain(const UPoly& p) {
  if (p.is_zero()) throw PreconditionError("Sturm chain of zero");
  std::vector<UPoly> chain{p};
  UPoly next = p.derivative();
  while (!next.is_zero()) {
    chain.push_back(next);
    const UPoly& a = chain[chain.size() - 2];
    UPoly r = -UPoly::divmod(a, next).second;
    next = std::move(r);
  }
  return chain;
}

namespace {

int variations(const std::vector<UPoly>& chain, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) * Rational(1, 2); }

}  // namespace

int count_roots(const std::vector<UPoly>& chain, const Rational& a, const Rational& b) {
  if (b < a) return 0;
  return variations(chain, a) - variations(chain, b);
}

Rational root_bound(const UPoly& p) {
  if (p.degree() < 1) return Rational(1);
  Rational m(0);
  const Rational lc = p.leading().abs();
  for (int k = 0; k < p.degree(); ++k) {
    const Rational v = p.coeffs()[static_cast<std::size_t>(k)].abs() / lc;
    if (m < v) m = v;
  }
  return m + Rational(1);
}

RootInterval refine_root(const UPoly& p, RootInterval r, const Rational& eps) {
  if (r.lo == r.hi) return r;
  if (p.sign_at(r.hi) == 0) {
    r.lo = r.hi;
    return r;
  }
  // p squarefree with one root in (lo, hi] and p(hi) != 0: sign change brackets it
  int shi = p.sign_at(r.hi);
  while (r.hi - r.lo > eps) {
    const Rational m = midpoint(r.lo, r.hi);
    const int sm = p.sign_at(m);
    if (sm == 0) {
      r.lo = r.hi = m;
      return r;
    }
    if (sm == shi) {
      r.hi = m;
    } else {
      r.lo = m;
    }
  }
  return r;
}

std::vector<RootInterval> isolate_real_roots(const UPoly& p, const Rational& eps) {
  if (p.is_zero()) throw PreconditionError("cannot isolate the roots of the zero polynomial");
  if (eps.sign() <= 0) throw PreconditionError("isolation precision must be positive");
  std::vector<RootInterval> out;
  if (p.degree() < 1) return out;
  const UPoly s = squarefree_part(p);
  const auto chain = sturm_chain(s);
  const Rational bound = root_bound(s);

  struct Pending {
    Rational lo, hi;
    int count;
  };
  std::vector<Pending> stack{{-bound, bound, count_roots(chain, -bound, bound)}};
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1) {
      out.push_back(refine_root(s, RootInterval{cur.lo, cur.hi, 1}, eps));
      continue;
    }
    const Rational m = midpoint(cur.lo, cur.hi);
    const int left = count_roots(chain, cur.lo, m);
    stack.push_back({m, cur.hi, cur.count - left});
    stack.push_back({cur.lo, m, left});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.hi < b.hi; });

  const auto factors = squarefree_decomposition(p);
  for (auto& r : out) {
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const UPoly& f = factors[k];
      if (f.degree() < 1) continue;
      const bool here = r.lo == r.hi ? f.sign_at(r.lo) == 0 : count_roots(sturm_chain(f), r.lo, r.hi) == 1;
      if (here) {
        r.multiplicity = static_cast<unsigned>(k + 1);
        break;
      }
    }
  }
  return out;
}

int sign_at_root(const UPoly& p, const RootInterval& root, const UPoly& q) {
  if (root.lo == root.hi) return q.sign_at(root.lo);
  if (q.is_zero()) return 0;
  const UPoly g = gcd(p, q);
  if (g.degree() >= 1 && count_roots(sturm_chain(g), root.lo, root.hi) == 1) return 0;
  const auto qchain = sturm_chain(q);
  RootInterval r = root;
  const int shi = p.sign_at(r.hi);
  while (count_roots(qchain, r.lo, r.hi) != 0) {
    const Rational m = midpoint(r.lo, r.hi);
    const int sm = p.sign_at(m);
    if (sm == 0) return q.sign_at(m);
    if (sm == shi) {
      r.hi = m;
    } else {
      r.lo = m;
    }
  }
  return q.sign_at(r.hi);
}

}  // namespace isocert::exactalg
