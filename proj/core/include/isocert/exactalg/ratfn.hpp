#pragma once

#include <map>
#include <span>
#include <string>

#include "isocert/exactalg/multipoly.hpp"

namespace isocert::exactalg {

/// Rational function num/den over Q in normal form: gcd(num, den) = 1, den
/// has integer coefficients with content 1 and a positive leading coefficient.
/// The zero function is 0/1.
class RatFn {
 public:
  explicit RatFn(SymbolTablePtr table);
  RatFn(SymbolTablePtr table, const Rational& c);
  RatFn(const MultiPoly& num);  // NOLINT(google-explicit-constructor)

  /// Reduces num/den to normal form; throws DivisionByZero when den = 0.
  static RatFn reduce(const MultiPoly& num, const MultiPoly& den);
  /// Like reduce, but the caller guarantees gcd(num, den) = 1; only scalars are normalized.
  static RatFn from_coprime(const MultiPoly& num, const MultiPoly& den);

  const SymbolTablePtr& table() const noexcept { return num_.table(); }
  const MultiPoly& num() const noexcept { return num_; }
  const MultiPoly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  std::uint32_t variable_mask() const { return num_.variable_mask() | den_.variable_mask(); }

  RatFn& operator+=(const RatFn& o);
  RatFn& operator-=(const RatFn& o);
  RatFn& operator*=(const RatFn& o);
  RatFn& operator/=(const RatFn& o);

  friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
  friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
  friend RatFn operator*(RatFn a, const RatFn& b) { return a *= b; }
  friend RatFn operator/(RatFn a, const RatFn& b) { return a /= b; }
  RatFn operator-() const;

  /// Equality of normal forms, which coincides with a*d - c*b = 0.
  friend bool operator==(const RatFn& a, const RatFn& b);

  RatFn pow(int e) const;
  RatFn derivative(std::size_t var) const;

  /// Exact value; PoleError names a vanishing denominator factor.
  Rational evaluate(std::span<const Rational> values) const;
  /// Exact value at a named point; symbols the function does not use may be left out.
  Rational evaluate(const std::map<std::string, Rational>& point) const;

  RatFn substitute(std::size_t var, const RatFn& image) const;
  /// Maps symbol i to images[i] over `target`.
  RatFn compose(const SymbolTablePtr& target, std::span<const RatFn> images) const;

  std::string to_string() const;

 private:
  RatFn(MultiPoly num, MultiPoly den, int) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize_scalars();
  [[noreturn]] void throw_pole(std::span<const Rational> values) const;

  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace isocert::exactalg
