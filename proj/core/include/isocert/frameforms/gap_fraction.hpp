#pragma once

#include <array>
#include <span>

#include "isocert/exactalg/ratfn.hpp"

namespace isocert::frameforms {

using exactalg::MultiPoly;
using exactalg::RatFn;
using exactalg::Rational;
using exactalg::SymbolTablePtr;

/// num * prod_p d_p^e_p where d_p = lam_j - lam_i for the six pairs i < j.
///
/// Every denominator met in the frame computations is a product of principal
/// curvature gaps, so keeping them factored makes sums cheap (lcm of exponent
/// vectors) and makes reduction a matter of trial division by linear factors.
/// The table must contain lam1..lam4.
class GapFraction {
 public:
  static constexpr int kPairs = 6;
  using Exponents = std::array<int, kPairs>;

  explicit GapFraction(SymbolTablePtr table);
  explicit GapFraction(MultiPoly num, Exponents e = {});
  GapFraction(SymbolTablePtr table, const Rational& c);

  /// (lam_a - lam_b)^power, power may be negative.
  static GapFraction difference(const SymbolTablePtr& table, int a, int b, int power = 1);
  /// Pair index of {i, j}, i != j, in 0..5.
  static int pair_index(int i, int j);
  /// lam_j - lam_i for pair p.
  static MultiPoly gap_poly(const SymbolTablePtr& table, int p);

  const SymbolTablePtr& table() const noexcept { return num_.table(); }
  const MultiPoly& num() const noexcept { return num_; }
  const Exponents& exponents() const noexcept { return e_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  GapFraction& operator+=(const GapFraction& o);
  GapFraction& operator-=(const GapFraction& o);
  GapFraction& operator*=(const GapFraction& o);
  /// The divisor must reduce to a constant times gap powers.
  GapFraction& operator/=(const GapFraction& o);

  friend GapFraction operator+(GapFraction a, const GapFraction& b) { return a += b; }
  friend GapFraction operator-(GapFraction a, const GapFraction& b) { return a -= b; }
  friend GapFraction operator*(GapFraction a, const GapFraction& b) { return a *= b; }
  friend GapFraction operator/(GapFraction a, const GapFraction& b) { return a /= b; }
  GapFraction operator-() const;

  /// Partial derivative with respect to lam_j (1..4), all other symbols frozen.
  GapFraction partial_lambda(int j) const;
  /// Coefficient of var^power in the numerator, same gap factor.
  GapFraction coefficient_of(std::size_t var, unsigned power) const;

  /// Divides out every gap factor of the numerator that the denominator holds.
  GapFraction cancelled() const;
  RatFn to_ratfn() const;

  /// Exact value; PoleError names the vanishing gap.
  Rational evaluate(std::span<const Rational> values) const;

 private:
  MultiPoly num_;
  Exponents e_{};
};

}  // namespace isocert::frameforms
