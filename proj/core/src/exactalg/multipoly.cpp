#include "isocert/exactalg/multipoly.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <sstream>

#include "isocert/errors.hpp"

namespace isocert::exactalg {

void Monomial::set(std::size_t i, unsigned e) {
  if (e > 255) throw PreconditionError("exponent overflow (max 255)");
  degree = static_cast<std::uint16_t>(degree - exp[i] + e);
  exp[i] = static_cast<std::uint8_t>(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree > other.degree) return false;
  for (std::size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] > other.exp[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial q;
  for (std::size_t i = 0; i < exp.size(); ++i) q.exp[i] = static_cast<std::uint8_t>(exp[i] - divisor.exp[i]);
  q.degree = static_cast<std::uint16_t>(degree - divisor.degree);
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < m.exp.size(); ++i) {
    const unsigned e = unsigned{a.exp[i]} + b.exp[i];
    if (e > 255) throw PreconditionError("exponent overflow (max 255)");
    m.exp[i] = static_cast<std::uint8_t>(e);
  }
  m.degree = static_cast<std::uint16_t>(a.degree + b.degree);
  return m;
}

int compare_grlex(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
  return std::memcmp(a.exp.data(), b.exp.data(), a.exp.size());
}

namespace {

bool term_greater(const Term& a, const Term& b) { return compare_grlex(a.mono, b.mono) > 0; }

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = compare_grlex(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? Term{b[j].mono, -b[j].coef} : b[j]);
      ++j;
    } else {
      Rational s = subtract ? a[i].coef - b[j].coef : a[i].coef + b[j].coef;
      if (!s.is_zero()) out.push_back(Term{a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(subtract ? Term{b[j].mono, -b[j].coef} : b[j]);
  return out;
}

void sort_and_combine(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::size_t w = 0;
  for (std::size_t r = 0; r < terms.size();) {
    Term acc = std::move(terms[r]);
    std::size_t s = r + 1;
    while (s < terms.size() && terms[s].mono == acc.mono) {
      acc.coef += terms[s].coef;
      ++s;
    }
    if (!acc.coef.is_zero()) terms[w++] = std::move(acc);
    r = s;
  }
  terms.resize(w);
}

std::string format_monomial(const SymbolTable& table, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += table.name(i);
    if (m.exp[i] > 1) s += '^' + std::to_string(m.exp[i]);
  }
  return s;
}

}  // namespace

MultiPoly::MultiPoly(SymbolTablePtr table) : table_(std::move(table)) {
  if (!table_) throw PreconditionError("polynomial needs a symbol table");
}

MultiPoly::MultiPoly(SymbolTablePtr table, const Rational& constant) : MultiPoly(std::move(table)) {
  if (!constant.is_zero()) terms_.push_back(Term{Monomial{}, constant});
}

MultiPoly MultiPoly::variable(SymbolTablePtr table, std::size_t var, unsigned power) {
  if (var >= table->size()) throw PreconditionError("variable index out of range");
  Monomial m;
  m.set(var, power);
  return monomial(std::move(table), m, Rational(1));
}

MultiPoly MultiPoly::variable(SymbolTablePtr table, std::string_view name, unsigned power) {
  const std::size_t var = table->index(name);
  return variable(std::move(table), var, power);
}

MultiPoly MultiPoly::monomial(SymbolTablePtr table, const Monomial& mono, const Rational& coef) {
  MultiPoly p(std::move(table));
  if (!coef.is_zero()) p.terms_.push_back(Term{mono, coef});
  return p;
}

MultiPoly MultiPoly::from_terms(SymbolTablePtr table, std::vector<Term> terms) {
  MultiPoly p(std::move(table));
  sort_and_combine(terms);
  p.terms_ = std::move(terms);
  return p;
}

Rational MultiPoly::constant_value() const {
  if (!is_constant()) throw PreconditionError("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_[0].coef;
}

const Term& MultiPoly::leading() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  return terms_.front();
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

std::uint32_t MultiPoly::variable_mask() const {
  std::uint32_t mask = 0;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < table_->size(); ++i) {
      if (t.mono.exp[i] != 0) mask |= (1u << i);
    }
  }
  return mask;
}

void MultiPoly::check_table(const MultiPoly& o) const {
  if (!same_table(table_, o.table_)) throw SymbolTableMismatch("polynomials over different symbol tables");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_table(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_table(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_table(b);
  MultiPoly out(a.table_);
  if (a.is_zero() || b.is_zero()) return out;
  const MultiPoly& small = a.terms_.size() <= b.terms_.size() ? a : b;
  const MultiPoly& large = &small == &a ? b : a;
  if (small.terms_.size() == 1) {
    // multiplying by one term preserves the order
    const Term& t = small.terms_[0];
    out.terms_.reserve(large.terms_.size());
    for (const auto& u : large.terms_) out.terms_.push_back(Term{t.mono * u.mono, t.coef * u.coef});
    return out;
  }
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& t : a.terms_)
    for (const auto& u : b.terms_) prod.push_back(Term{t.mono * u.mono, t.coef * u.coef});
  sort_and_combine(prod);
  out.terms_ = std::move(prod);
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& t : out.terms_) t.coef = -t.coef;
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (!same_table(a.table_, b.table_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
  }
  return true;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(table_, Rational(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const unsigned e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back(Term{m, t.coef * Rational(static_cast<long>(e))});
  }
  return from_terms(table_, std::move(out));
}

Rational MultiPoly::evaluate(std::span<const Rational> values) const {
  if (values.size() != table_->size()) throw PreconditionError("evaluation point has the wrong arity");
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (std::size_t i = 0; i < table_->size(); ++i) {
      if (t.mono.exp[i] != 0) v *= values[i].pow(t.mono.exp[i]);
    }
    sum += v;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& image) const {
  check_table(image);
  if (!depends_on(var)) return *this;
  const auto coeffs = coefficients_in(var);
  // Horner in the substituted variable
  MultiPoly acc(table_);
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = acc * image + coeffs[k];
  }
  return acc;
}

MultiPoly MultiPoly::compose(const SymbolTablePtr& target, std::span<const MultiPoly> images) const {
  if (images.size() != table_->size()) throw PreconditionError("compose needs one image per symbol");
  for (const auto& im : images) {
    if (!same_table(im.table(), target)) throw SymbolTableMismatch("compose images over the wrong table");
  }
  // cache powers per variable
  std::vector<std::vector<MultiPoly>> powers(table_->size());
  MultiPoly out(target);
  std::vector<Term> collected;
  for (const auto& t : terms_) {
    MultiPoly v(target, t.coef);
    for (std::size_t i = 0; i < table_->size() && !v.is_zero(); ++i) {
      const unsigned e = t.mono.exp[i];
      if (e == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(MultiPoly(target, Rational(1)));
      while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
      v *= cache[e];
    }
    for (auto& term : v.terms_) collected.push_back(std::move(term));
  }
  return from_terms(target, std::move(collected));
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    const unsigned e = m[var];
    m.set(var, 0);
    buckets[e].push_back(Term{m, t.coef});
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    // removing one variable keeps relative grlex order only within equal powers,
    // which is what each bucket holds, but degrees shift uniformly, so order is kept
    MultiPoly p(table_);
    p.terms_ = std::move(b);
    out.push_back(std::move(p));
  }
  return out;
}

MultiPoly MultiPoly::from_coefficients(const SymbolTablePtr& table, const std::vector<MultiPoly>& coeffs,
                                       std::size_t var) {
  std::vector<Term> all;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& t : coeffs[k].terms_) {
      Monomial m = t.mono;
      m.set(var, m[var] + static_cast<unsigned>(k));
      all.push_back(Term{m, t.coef});
    }
  }
  return from_terms(table, std::move(all));
}

MultiPoly MultiPoly::leading_coefficient_in(std::size_t var) const {
  if (is_zero()) return *this;
  const unsigned d = degree_in(var);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono[var] != d) continue;
    Monomial m = t.mono;
    m.set(var, 0);
    out.push_back(Term{m, t.coef});
  }
  MultiPoly p(table_);
  p.terms_ = std::move(out);  // same-power bucket: order preserved
  return p;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  check_table(divisor);
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (is_zero()) return MultiPoly(table_);
  const Term& lead = divisor.terms_.front();
  if (divisor.terms_.size() == 1) {
    MultiPoly q(table_);
    q.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!lead.mono.divides(t.mono)) return std::nullopt;
      q.terms_.push_back(Term{t.mono.quotient(lead.mono), t.coef / lead.coef});
    }
    return q;
  }
  if (total_degree() < divisor.total_degree()) return std::nullopt;
  const std::uint32_t dmask = divisor.variable_mask();
  if ((dmask & ~variable_mask()) != 0) return std::nullopt;

  std::vector<Term> quotient;
  MultiPoly rem = *this;
  while (!rem.is_zero()) {
    const Term& r = rem.terms_.front();
    if (!lead.mono.divides(r.mono)) return std::nullopt;
    Term q{r.mono.quotient(lead.mono), r.coef / lead.coef};
    std::vector<Term> scaled;
    scaled.reserve(divisor.terms_.size());
    for (const auto& t : divisor.terms_) scaled.push_back(Term{t.mono * q.mono, t.coef * q.coef});
    rem.terms_ = merge(rem.terms_, scaled, true);
    quotient.push_back(std::move(q));
  }
  MultiPoly out(table_);
  out.terms_ = std::move(quotient);  // produced in decreasing order
  return out;
}

MultiPoly MultiPoly::exact_quotient(const MultiPoly& divisor) const {
  auto q = divide_exact(divisor);
  if (!q) throw Error("internal: division expected to be exact was not");
  return *std::move(q);
}

MultiPoly MultiPoly::primitive() const {
  if (is_zero()) return *this;
  mpz_class den_lcm = 1;
  for (const auto& t : terms_) den_lcm = lcm_denominators(den_lcm, t.coef);
  mpz_class num_gcd = 0;
  for (const auto& t : terms_) {
    const mpz_class n = t.coef.numerator() * (den_lcm / t.coef.denominator());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  if (terms_.front().coef.sign() < 0) scale = -scale;
  return *this * scale;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const Rational& c = t.coef;
    const std::string mono = format_monomial(*table_, t.mono);
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << mag.to_string();
    } else if (mag.is_one()) {
      os << mono;
    } else {
      os << mag.to_string() << '*' << mono;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// gcd / resultant

namespace {

MultiPoly one_like(const MultiPoly& p) { return MultiPoly(p.table(), Rational(1)); }

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

/// gcd of the coefficients of `p` w.r.t. `var`, folded into `start`.
MultiPoly fold_content(MultiPoly g, const MultiPoly& p, std::size_t var) {
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gcd_rec(g, c);
    if (g.is_constant()) return one_like(p);
  }
  return g;
}

/// gcd of a polynomial with a single term: the common monomial part.
MultiPoly monomial_gcd(const MultiPoly& term, const MultiPoly& p) {
  Monomial m = term.leading().mono;
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < SymbolTable::kMaxSymbols; ++i) {
      if (t.mono.exp[i] < m.exp[i]) m.set(i, t.mono.exp[i]);
    }
    if (m.degree == 0) break;
  }
  return MultiPoly::monomial(p.table(), m, Rational(1));
}

MultiPoly prs_gcd(MultiPoly a, MultiPoly b, std::size_t var) {
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  MultiPoly g = one_like(a);
  MultiPoly h = one_like(a);
  while (true) {
    const unsigned delta = a.degree_in(var) - b.degree_in(var);
    MultiPoly r = pseudo_remainder(a, b, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) return one_like(a);
    a = std::move(b);
    b = r.exact_quotient(g * h.pow(delta));
    g = a.leading_coefficient_in(var);
    if (delta != 0) h = g.pow(delta).exact_quotient(h.pow(delta - 1));
  }
  // primitive part of b with respect to var
  MultiPoly content = fold_content(MultiPoly(b.table()), b, var);
  return content.is_constant() ? b : b.exact_quotient(content);
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant()) return one_like(a);
  if (a.term_count() == 1) return monomial_gcd(a, b);
  if (b.term_count() == 1) return monomial_gcd(b, a);
  if (auto q = a.divide_exact(b)) return b;
  if (auto q = b.divide_exact(a)) return a;

  const std::uint32_t ma = a.variable_mask();
  const std::uint32_t mb = b.variable_mask();
  if (const std::uint32_t only_a = ma & ~mb; only_a != 0) {
    return fold_content(b, a, static_cast<std::size_t>(std::countr_zero(only_a)));
  }
  if (const std::uint32_t only_b = mb & ~ma; only_b != 0) {
    return fold_content(a, b, static_cast<std::size_t>(std::countr_zero(only_b)));
  }
  // every variable is shared: recurse on the one of least degree
  std::size_t var = 0;
  unsigned best = ~0u;
  for (std::uint32_t m = ma; m != 0; m &= m - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(m));
    const unsigned d = std::max(a.degree_in(v), b.degree_in(v));
    if (d < best) {
      best = d;
      var = v;
    }
  }
  const MultiPoly ca = fold_content(MultiPoly(a.table()), a, var);
  const MultiPoly cb = fold_content(MultiPoly(b.table()), b, var);
  const MultiPoly pa = ca.is_constant() ? a : a.exact_quotient(ca);
  const MultiPoly pb = cb.is_constant() ? b : b.exact_quotient(cb);
  const MultiPoly gc = gcd_rec(ca, cb);
  return gc * prs_gcd(pa, pb, var);
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (!same_table(a.table(), b.table())) throw SymbolTableMismatch("gcd over different symbol tables");
  if (a.is_zero() && b.is_zero()) return a;
  return gcd_rec(a, b).primitive();
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
  if (b.is_zero()) throw DivisionByZero("pseudo-remainder by zero");
  const unsigned db = b.degree_in(var);
  auto rc = a.coefficients_in(var);
  const auto bc = b.coefficients_in(var);
  const MultiPoly& lb = bc.back();
  auto degree_of = [](const std::vector<MultiPoly>& v) -> int {
    for (std::size_t k = v.size(); k-- > 0;) {
      if (!v[k].is_zero()) return static_cast<int>(k);
    }
    return -1;
  };
  int dr = degree_of(rc);
  int e = dr - static_cast<int>(db) + 1;
  if (e < 0) e = 0;
  while (dr >= static_cast<int>(db)) {
    const MultiPoly t = rc[dr];
    const std::size_t shift = static_cast<std::size_t>(dr) - db;
    for (int k = 0; k <= dr; ++k) rc[k] *= lb;
    for (std::size_t k = 0; k <= db; ++k) rc[k + shift] -= t * bc[k];
    --e;
    dr = degree_of(rc);
  }
  MultiPoly r = MultiPoly::from_coefficients(a.table(), rc, var);
  if (e > 0) r *= lb.pow(static_cast<unsigned>(e));
  return r;
}

MultiPoly resultant(const MultiPoly& a_in, const MultiPoly& b_in, std::size_t var) {
  if (!same_table(a_in.table(), b_in.table())) throw SymbolTableMismatch("resultant over different symbol tables");
  if (a_in.is_zero() || b_in.is_zero()) return MultiPoly(a_in.table());
  MultiPoly a = a_in;
  MultiPoly b = b_in;
  int sign = 1;
  if (a.degree_in(var) < b.degree_in(var)) {
    std::swap(a, b);
    if ((a.degree_in(var) & 1u) && (b.degree_in(var) & 1u)) sign = -1;
  }
  if (b.degree_in(var) == 0) {
    MultiPoly r = b.pow(a.degree_in(var));
    return sign < 0 ? -r : r;
  }
  MultiPoly g = one_like(a);
  MultiPoly h = one_like(a);
  while (true) {
    const unsigned da = a.degree_in(var);
    const unsigned db = b.degree_in(var);
    const unsigned delta = da - db;
    if ((da & 1u) && (db & 1u)) sign = -sign;
    MultiPoly r = pseudo_remainder(a, b, var);
    a = std::move(b);
    b = r.exact_quotient(g * h.pow(delta));
    g = a.leading_coefficient_in(var);
    if (delta != 0) h = g.pow(delta).exact_quotient(h.pow(delta - 1));
    if (b.is_zero()) return MultiPoly(a.table());
    if (b.degree_in(var) == 0) break;
  }
  const unsigned da = a.degree_in(var);
  MultiPoly res = da == 0 ? h : b.pow(da).exact_quotient(h.pow(da - 1));
  return sign < 0 ? -res : res;
}

}  // namespace isocert::exactalg
