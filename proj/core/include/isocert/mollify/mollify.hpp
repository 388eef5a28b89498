#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace isocert::mollify {

/// Cumulative integrals of a smooth profile on [0, 1], tabulated at panel edges.
class ProfileTable {
 public:
  /// Tabulates int_x^1 w(y) psi(y) dy for the weights w = 1 and w = y.
  ProfileTable(double (*psi)(double), std::size_t panels);

  /// int_x^1 psi(y) dy for x in [0, 1].
  double tail0(double x) const;
  /// int_x^1 (y - x) psi(y) dy for x in [0, 1].
  double tail_moment(double x) const;
  double error_bound() const noexcept { return error_; }

 private:
  double (*psi_)(double);
  std::size_t panels_;
  std::vector<double> t0_;  // tails at the edges k / panels
  std::vector<double> t1_;
  double error_ = 0.0;
  double partial(double a, double b, double x, bool moment) const;
};

/// Even convex smoothing of |t|: the convolution of |.| with a normalized
/// exp(-1/(1 - x^2)) bump supported on [-delta/2, delta/2].
class Mollifier {
 public:
  explicit Mollifier(double delta);

  double delta() const noexcept { return delta_; }
  /// Normalizing integral of the unscaled bump over [-1, 1].
  double bump_mass() const noexcept { return mass_; }
  /// Absolute error bound on h and h' from the quadrature tables.
  double error_bound() const noexcept;

  double h(double t) const;
  double dh(double t) const;
  /// Analytic second derivative, 2 * bump(t).
  double d2h(double t) const;

 private:
  double delta_;
  double mass_;
};

Mollifier build_mollifier(double delta);

/// f = (lam3 - lam2)^2, g = (lam2 - lam1)^2 with f + g >= 2 eps0.
struct GapPair {
  double f = 0.0;
  double g = 0.0;
  double eps0 = 0.0;
  /// Throws PreconditionError when the invariants fail.
  void validate() const;
};

/// K = (f + g)/2 - h(f - g)/2; requires delta <= eps0.
double build_K(const GapPair& pair, const Mollifier& moll);

/// Smooth ramp: 0 for t <= eps/3, 1 for t >= eps, monotone in between.
class Cutoff {
 public:
  explicit Cutoff(double eps);

  double eps() const noexcept { return eps_; }
  double eta(double t) const;
  double deta(double t) const;
  /// Realized constant c with 0 <= eta' <= c / eps.
  double slope_constant() const noexcept;
  double error_bound() const noexcept;

 private:
  double eps_;
};

Cutoff build_cutoff(double eps);

/// Outcome of one sampled property.
struct PropertyCheck {
  std::string name;
  bool pass = false;
  std::size_t samples = 0;
  /// Largest violation magnitude seen (0 when none).
  double worst = 0.0;
};

std::vector<PropertyCheck> check_mollifier(const Mollifier& moll, std::size_t samples);
std::vector<PropertyCheck> check_K(double eps0, double delta, std::size_t samples, std::uint64_t seed);
std::vector<PropertyCheck> check_cutoff(const Cutoff& cut, std::size_t samples);

/// Sampled dumps. Mollifier columns: t, h, dh, d2h, abs_t over [-2 delta, 2 delta].
std::string mollifier_csv(const Mollifier& moll, std::size_t samples);
/// Columns: t, eta, deta over [0, 4 eps / 3].
std::string cutoff_csv(const Cutoff& cut, std::size_t samples);

}  // namespace isocert::mollify
