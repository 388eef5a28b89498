#include "isocert/mollify/mollify.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <cstdio>
#include <random>

#include "isocert/errors.hpp"

namespace isocert::mollify {

namespace {

constexpr std::size_t kPanels = 64;

double bump(double y) {
  const double q = 1.0 - y * y;
  return q <= 0.0 ? 0.0 : std::exp(-1.0 / q);
}

double ramp_density(double u) {
  const double q = u * (1.0 - u);
  return q <= 0.0 ? 0.0 : std::exp(-1.0 / q);
}

const ProfileTable& bump_table() {
  static const ProfileTable t(&bump, kPanels);
  return t;
}

const ProfileTable& ramp_table() {
  static const ProfileTable t(&ramp_density, kPanels);
  return t;
}

double ramp_mass() {
  static const double z = ramp_table().tail0(0.0);
  return z;
}

std::string row(std::initializer_list<double> xs) {
  std::string out;
  char buf[40];
  bool first = true;
  for (double x : xs) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    if (!first) out += ',';
    out += buf;
    first = false;
  }
  out += '\n';
  return out;
}

/// Weyl sequence in [0, 1).
double weyl(std::size_t k) {
  const double phi = 0.6180339887498949;
  const double v = static_cast<double>(k) * phi;
  return v - std::floor(v);
}

PropertyCheck make(std::string name, std::size_t samples, double worst) {
  return PropertyCheck{std::move(name), worst <= 0.0, samples, std::max(worst, 0.0)};
}

}  // namespace

ProfileTable::ProfileTable(double (*psi)(double), std::size_t panels)
    : psi_(psi), panels_(panels), t0_(panels + 1, 0.0), t1_(panels + 1, 0.0) {
  using boost::math::quadrature::gauss;
  const double w = 1.0 / static_cast<double>(panels);
  for (std::size_t k = panels; k-- > 0;) {
    const double a = static_cast<double>(k) * w;
    const double b = static_cast<double>(k + 1) * w;
    auto moment = [&](double y) { return (y - a) * psi_(y); };
    const double i0 = gauss<double, 30>::integrate(psi_, a, b);
    const double i1 = gauss<double, 30>::integrate(moment, a, b);
    // the lower-order rule bounds the error of the higher one
    error_ += std::abs(i0 - gauss<double, 20>::integrate(psi_, a, b)) +
              std::abs(i1 - gauss<double, 20>::integrate(moment, a, b));
    t0_[k] = t0_[k + 1] + i0;
    // int_a^1 (y - a) psi = int_a^b (y - a) psi + (b - a) tail0(b) + int_b^1 (y - b) psi
    t1_[k] = t1_[k + 1] + i1 + (b - a) * t0_[k + 1];
  }
  error_ = 2.0 * error_ + 1e-15;
}

double ProfileTable::partial(double a, double b, double x, bool moment) const {
  using boost::math::quadrature::gauss;
  if (b <= a) return 0.0;
  if (moment) return gauss<double, 30>::integrate([&](double y) { return (y - x) * psi_(y); }, a, b);
  return gauss<double, 30>::integrate(psi_, a, b);
}

double ProfileTable::tail0(double x) const {
  x = std::clamp(x, 0.0, 1.0);
  const auto k = std::min(panels_, static_cast<std::size_t>(std::ceil(x * static_cast<double>(panels_))));
  const double e = static_cast<double>(k) / static_cast<double>(panels_);
  return partial(x, e, x, false) + t0_[k];
}

double ProfileTable::tail_moment(double x) const {
  x = std::clamp(x, 0.0, 1.0);
  const auto k = std::min(panels_, static_cast<std::size_t>(std::ceil(x * static_cast<double>(panels_))));
  const double e = static_cast<double>(k) / static_cast<double>(panels_);
  // every piece is an integral of a nonnegative function
  return partial(x, e, x, true) + (e - x) * t0_[k] + t1_[k];
}

Mollifier::Mollifier(double delta) : delta_(delta), mass_(0.0) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw PreconditionError("mollifier width delta must be positive");
  mass_ = 2.0 * bump_table().tail0(0.0);
}

double Mollifier::error_bound() const noexcept { return std::max(delta_, 2.0) * bump_table().error_bound() / mass_; }

double Mollifier::h(double t) const {
  const double a = std::abs(t);
  const double x = 2.0 * a / delta_;
  if (x >= 1.0) return a;
  return a + delta_ / mass_ * bump_table().tail_moment(x);
}

double Mollifier::dh(double t) const {
  const double a = std::abs(t);
  const double x = 2.0 * a / delta_;
  if (x >= 1.0) return t > 0.0 ? 1.0 : -1.0;
  const double v = std::clamp(1.0 - 2.0 * bump_table().tail0(x) / mass_, 0.0, 1.0);
  return t >= 0.0 ? v : -v;
}

double Mollifier::d2h(double t) const { return 4.0 * bump(2.0 * t / delta_) / (delta_ * mass_); }

Mollifier build_mollifier(double delta) { return Mollifier(delta); }

void GapPair::validate() const {
  if (!(eps0 > 0.0)) throw PreconditionError("eps0 must be positive");
  if (!(f >= 0.0) || !(g >= 0.0)) throw PreconditionError("gap squares f and g must be nonnegative");
  if (!(f + g >= 2.0 * eps0)) throw PreconditionError("gap pair violates f + g >= 2 eps0");
}

double build_K(const GapPair& pair, const Mollifier& moll) {
  pair.validate();
  if (moll.delta() > pair.eps0) throw PreconditionError("K needs delta <= eps0");
  return 0.5 * (pair.f + pair.g) - 0.5 * moll.h(pair.f - pair.g);
}

Cutoff::Cutoff(double eps) : eps_(eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw PreconditionError("cutoff scale eps must be positive");
  (void)ramp_mass();
}

double Cutoff::eta(double t) const {
  const double u = (t - eps_ / 3.0) / (2.0 * eps_ / 3.0);
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  // the ramp density is symmetric about 1/2
  if (u <= 0.5) return std::clamp(ramp_table().tail0(1.0 - u) / ramp_mass(), 0.0, 1.0);
  return std::clamp(1.0 - ramp_table().tail0(u) / ramp_mass(), 0.0, 1.0);
}

double Cutoff::deta(double t) const {
  const double u = (t - eps_ / 3.0) / (2.0 * eps_ / 3.0);
  return ramp_density(u) / ramp_mass() * 1.5 / eps_;
}

double Cutoff::slope_constant() const noexcept { return 1.5 * std::exp(-4.0) / ramp_mass(); }

double Cutoff::error_bound() const noexcept { return ramp_table().error_bound() / ramp_mass(); }

Cutoff build_cutoff(double eps) { return Cutoff(eps); }

std::vector<PropertyCheck> check_mollifier(const Mollifier& moll, std::size_t samples) {
  const double d = moll.delta();
  const double step = 1e-3;
  double even = 0, below = 0, outside = 0, slope = 0, sign = 0, curv = 0, fd_curv = 0, fd_agree = 0;
  std::size_t n_out = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = (4.0 * weyl(k + 1) - 2.0) * d;
    const double h = moll.h(t);
    even = std::max(even, std::abs(h - moll.h(-t)) - 1e-12);
    below = std::max(below, std::abs(t) - h);
    if (std::abs(t) >= d) {
      ++n_out;
      outside = std::max(outside, std::abs(h - std::abs(t)) - 1e-12);
    }
    slope = std::max(slope, std::abs(moll.dh(t)) - 1.0);
    if (t >= 0.0) sign = std::max(sign, -moll.dh(t));
    curv = std::max(curv, -moll.d2h(t));
    const double fd = (moll.h(t + step) - 2.0 * h + moll.h(t - step)) / (step * step);
    fd_curv = std::max(fd_curv, -fd - 1e-8);
    // central difference of h' in the scaled variable t / delta, extrapolated over steps 2s and s
    const double s = step * d;
    auto dd = [&](double r) { return (moll.dh(t + r) - moll.dh(t - r)) / (2.0 * r); };
    const double rich = (4.0 * dd(s / 2.0) - dd(s)) / 3.0;
    fd_agree = std::max(fd_agree, d * std::abs(rich - moll.d2h(t)) - 1e-6);
  }
  const double h0 = moll.h(0.0);
  std::vector<PropertyCheck> out;
  out.push_back(make("h_even", samples, even));
  out.push_back(make("h_ge_abs", samples, below));
  out.push_back(make("h_eq_abs_for_abs_t_ge_delta", n_out, outside));
  out.push_back(make("abs_dh_le_1", samples, slope));
  out.push_back(make("dh_nonneg_for_t_ge_0", samples, sign));
  out.push_back(make("d2h_nonneg_analytic", samples, curv));
  out.push_back(make("d2h_nonneg_finite_difference", samples, fd_curv));
  out.push_back(make("d2h_finite_difference_agreement", samples, fd_agree));
  out.push_back(make("h0_in_0_half_delta", 1, h0 > 0.0 ? h0 - d / 2.0 : 1.0));
  out.push_back(make("quadrature_error_le_1e-10", 1, moll.error_bound() - 1e-10));
  return out;
}

std::vector<PropertyCheck> check_K(double eps0, double delta, std::size_t samples, std::uint64_t seed) {
  const Mollifier moll(delta);
  const Mollifier half(delta / 2.0);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double nonneg = 0, min_out = 0, lower_in = 0, remark = 0;
  std::size_t n_out = 0, n_in = 0, n_remark = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double s = 2.0 * eps0 * (1.0 + 4.0 * unit(rng));
    const bool wide = k % 2 == 0;
    double diff = wide ? delta + (s - delta) * unit(rng) : delta * (2.0 * unit(rng) - 1.0);
    if (unit(rng) < 0.5) diff = -diff;
    // f, g >= 0 with f + g = s and f - g = diff
    const GapPair p{std::max(0.0, 0.5 * (s + diff)), std::max(0.0, 0.5 * (s - diff)), eps0};
    const double K = build_K(p, moll);
    const double scale = 1e-12 * std::max(1.0, s);
    nonneg = std::max(nonneg, -K - scale);
    if (std::abs(p.f - p.g) >= delta) {
      ++n_out;
      min_out = std::max(min_out, std::abs(K - std::min(p.f, p.g)) - scale);
      // the same pair under width delta/2 when |f - g| >= delta everywhere
      ++n_remark;
      remark = std::max(remark, std::abs(build_K(p, half) - std::min(p.f, p.g)) - scale);
    }
    if (moll.h(p.f - p.g) <= delta) {
      ++n_in;
      lower_in = std::max(lower_in, eps0 - delta / 2.0 - K - scale);
    }
  }
  double breach = 1.0;
  try {
    (void)build_K(GapPair{0.5 * eps0, 0.5 * eps0, eps0}, moll);
  } catch (const PreconditionError&) {
    breach = 0.0;
  }
  std::vector<PropertyCheck> out;
  out.push_back(make("K_nonneg", samples, nonneg));
  out.push_back(make("K_eq_min_for_abs_f_minus_g_ge_delta", n_out, min_out));
  out.push_back(make("K_ge_eps0_minus_half_delta_inside", n_in, lower_in));
  out.push_back(make("K_eq_min_everywhere_at_half_width", n_remark, remark));
  out.push_back(make("invalid_pair_rejected", 1, breach));
  return out;
}

std::vector<PropertyCheck> check_cutoff(const Cutoff& cut, std::size_t samples) {
  const double e = cut.eps();
  const double c = cut.slope_constant();
  double range = 0, zero = 0, one = 0, slope = 0, outside = 0, mono = 0, fd = 0;
  const double lo = 0.0;
  const double hi = 4.0 * e / 3.0;
  const double h = (hi - lo) / static_cast<double>(samples);
  double prev = cut.eta(lo);
  for (std::size_t k = 0; k <= samples; ++k) {
    const double t = lo + h * static_cast<double>(k);
    const double v = cut.eta(t);
    const double dv = cut.deta(t);
    range = std::max({range, -v, v - 1.0});
    if (t <= e / 3.0) {
      zero = std::max(zero, std::abs(v));
      outside = std::max(outside, std::abs(dv));
    }
    if (t >= e) {
      one = std::max(one, std::abs(v - 1.0));
      outside = std::max(outside, std::abs(dv));
    }
    slope = std::max({slope, -dv, dv - c / e});
    if (k > 0) {
      mono = std::max(mono, prev - v);
      fd = std::max(fd, (v - prev) / h - 4.0 / e);
    }
    prev = v;
  }
  std::vector<PropertyCheck> out;
  out.push_back(make("eta_in_0_1", samples + 1, range));
  out.push_back(make("eta_zero_for_t_le_eps_over_3", samples + 1, std::max(zero, std::abs(cut.eta(e / 3.0)))));
  out.push_back(make("eta_one_for_t_ge_eps", samples + 1, std::max(one, std::abs(cut.eta(e) - 1.0))));
  out.push_back(make("deta_in_0_c_over_eps", samples + 1, slope));
  out.push_back(make("deta_zero_outside_ramp", samples + 1, outside));
  out.push_back(make("eta_nondecreasing", samples, mono));
  out.push_back(make("finite_difference_slope_le_4_over_eps", samples, fd));
  out.push_back(make("slope_constant_le_4", 1, c - 4.0));
  return out;
}

std::string mollifier_csv(const Mollifier& moll, std::size_t samples) {
  std::string out = "t,h,dh,d2h,abs_t\n";
  const double d = moll.delta();
  const std::size_t n = std::max<std::size_t>(samples, 2);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = -2.0 * d + 4.0 * d * static_cast<double>(k) / static_cast<double>(n - 1);
    out += row({t, moll.h(t), moll.dh(t), moll.d2h(t), std::abs(t)});
  }
  return out;
}

std::string cutoff_csv(const Cutoff& cut, std::size_t samples) {
  std::string out = "t,eta,deta\n";
  const double hi = 4.0 * cut.eps() / 3.0;
  const std::size_t n = std::max<std::size_t>(samples, 2);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = hi * static_cast<double>(k) / static_cast<double>(n - 1);
    out += row({t, cut.eta(t), cut.deta(t)});
  }
  return out;
}

}  // namespace isocert::mollify
