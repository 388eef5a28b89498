#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isocert/exactalg/rational.hpp"
#include "isocert/exactalg/symbol_table.hpp"

namespace isocert::exactalg {

/// Exponent vector over a symbol table, with its total degree cached.
struct Monomial {
  std::array<std::uint8_t, SymbolTable::kMaxSymbols> exp{};
  std::uint16_t degree = 0;

  unsigned operator[](std::size_t i) const { return exp[i]; }
  void set(std::size_t i, unsigned e);

  bool divides(const Monomial& other) const;
  Monomial quotient(const Monomial& divisor) const;  // requires divisor.divides(*this)

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

/// Graded lexicographic comparison: negative, zero or positive.
int compare_grlex(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Rational coef;
};

/// Sparse multivariate polynomial over the rationals.  Terms are kept in
/// strictly decreasing graded-lex order and never carry a zero coefficient;
/// the zero polynomial has no terms.
class MultiPoly {
 public:
  explicit MultiPoly(SymbolTablePtr table);
  MultiPoly(SymbolTablePtr table, const Rational& constant);

  static MultiPoly variable(SymbolTablePtr table, std::size_t var, unsigned power = 1);
  static MultiPoly variable(SymbolTablePtr table, std::string_view name, unsigned power = 1);
  static MultiPoly monomial(SymbolTablePtr table, const Monomial& mono, const Rational& coef);
  /// Builds from unsorted terms; like monomials are combined.
  static MultiPoly from_terms(SymbolTablePtr table, std::vector<Term> terms);

  const SymbolTablePtr& table() const noexcept { return table_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree == 0); }
  Rational constant_value() const;  // requires is_constant()
  const Term& leading() const;      // requires !is_zero()

  unsigned degree_in(std::size_t var) const;
  unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree; }
  /// Bit i is set when symbol i occurs.
  std::uint32_t variable_mask() const;
  bool depends_on(std::size_t var) const { return (variable_mask() >> var) & 1u; }

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned e) const;
  MultiPoly derivative(std::size_t var) const;

  /// Value at a full assignment (one rational per symbol of the table).
  Rational evaluate(std::span<const Rational> values) const;

  /// Replaces symbol `var` by `image` (same table).
  MultiPoly substitute(std::size_t var, const MultiPoly& image) const;
  /// Maps symbol i of this table to images[i], a polynomial over `target`.
  MultiPoly compose(const SymbolTablePtr& target, std::span<const MultiPoly> images) const;

  /// Coefficients with respect to `var`, index = power of `var`.
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;
  static MultiPoly from_coefficients(const SymbolTablePtr& table, const std::vector<MultiPoly>& coeffs,
                                     std::size_t var);
  /// Leading coefficient with respect to `var`.
  MultiPoly leading_coefficient_in(std::size_t var) const;

  /// Quotient if `divisor` divides this polynomial exactly.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;
  /// Quotient of a division known to be exact; throws otherwise.
  MultiPoly exact_quotient(const MultiPoly& divisor) const;

  /// Scalar multiple with integer coefficients of content 1 and positive leading coefficient.
  MultiPoly primitive() const;

  std::string to_string() const;

 private:
  void check_table(const MultiPoly& o) const;
  SymbolTablePtr table_;
  std::vector<Term> terms_;
};

/// Greatest common divisor over Q, normalized by MultiPoly::primitive().
/// gcd(0, 0) = 0; a nonzero constant argument gives 1.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

/// Pseudo-remainder of a by b as polynomials in `var`.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t var);

/// Resultant of a and b with respect to `var` (subresultant algorithm).
MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, std::size_t var);

}  // namespace isocert::exactalg
