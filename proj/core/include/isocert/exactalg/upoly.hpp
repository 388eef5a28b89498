#pragma once

#include <string>
#include <utility>
#include <vector>

#include "isocert/exactalg/multipoly.hpp"

namespace isocert::exactalg {

/// Dense univariate polynomial over Q; coeffs[k] multiplies x^k, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c) { return UPoly({c}); }
  static UPoly x() { return UPoly({Rational(0), Rational(1)}); }
  /// Reads a polynomial in `var` only; throws if another symbol occurs.
  static UPoly from_multipoly(const MultiPoly& p, std::size_t var);

  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rational& leading() const;

  Rational evaluate(const Rational& x) const;
  int sign_at(const Rational& x) const { return evaluate(x).sign(); }
  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const Rational& c);
  UPoly operator-() const;
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  UPoly pow(unsigned e) const;
  /// p(q(x)).
  UPoly compose(const UPoly& q) const;

  /// Quotient and remainder; throws DivisionByZero for b = 0.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd (zero when both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
/// p / gcd(p, p').
UPoly squarefree_part(const UPoly& p);
/// Yun decomposition: factors[k] collects the roots of multiplicity k+1.
std::vector<UPoly> squarefree_decomposition(const UPoly& p);

/// Sturm chain of p (p, p', -rem, ...).
std::vector<UPoly> sturm_chain(const UPoly& p);
/// Number of distinct real roots of p in (a, b].
int count_roots(const std::vector<UPoly>& chain, const Rational& a, const Rational& b);
/// Cauchy bound: every real root lies in (-B, B).
Rational root_bound(const UPoly& p);

struct RootInterval {
  Rational lo;
  Rational hi;  // lo == hi for a root met exactly
  unsigned multiplicity = 1;
};

/// Disjoint isolating intervals, one per distinct real root, sorted, width <= eps.
std::vector<RootInterval> isolate_real_roots(const UPoly& p, const Rational& eps);

/// Shrinks an isolating interval of a root of squarefree `p` until width <= eps.
RootInterval refine_root(const UPoly& p, RootInterval r, const Rational& eps);

/// Exact sign of q at the unique root of squarefree p inside the isolating interval.
int sign_at_root(const UPoly& p, const RootInterval& root, const UPoly& q);

}  // namespace isocert::exactalg
