#pragma once

// Closed-form coefficients as printed for the frame computation, written once
// over an abstract scalar context so the same text serves exact symbolic
// checks, exact point evaluation and interval enclosures.
//
// A context C provides
//   T d(int i, int j)       lam_i - lam_j
//   T h(int i, int j, int k) h_ijk (only h44i and the off-diagonal h123.. are used)
//   T R(int i, int j)       R_ijij
//   T k(long v)             constant
// and T supports + - * / and unary minus.

#include <utility>

namespace isocert::frameforms::stated {

template <class T>
T sq(const T& x) {
  return x * x;
}

/// gamma = (l2-l1)^2 (l3-l1)^2 (l3-l2)^2.
template <class C>
auto gamma(const C& c) {
  return sq(c.d(2, 1)) * sq(c.d(3, 1)) * sq(c.d(3, 2));
}

/// The four printed gamma*L_i polynomials, i = 1..4.
template <class C>
auto gamma_L(const C& c, int i) {
  auto d = [&](int a, int b) { return c.d(a, b); };
  switch (i) {
    case 1:
      return d(4, 3) * (sq(d(3, 1)) * d(3, 2) - d(4, 2) * sq(d(4, 1))) - d(4, 2) * d(3, 2) * sq(d(2, 1));
    case 2:
      return d(4, 3) * (sq(d(3, 2)) * d(3, 1) - d(4, 1) * sq(d(4, 2))) - d(4, 1) * d(3, 1) * sq(d(2, 1));
    case 3:
      return d(2, 1) * (sq(d(3, 2)) * d(4, 2) - d(4, 1) * sq(d(3, 1))) - d(4, 1) * d(4, 2) * sq(d(4, 3));
    default:
      return d(2, 1) * (sq(d(4, 2)) * d(3, 2) - d(3, 1) * sq(d(4, 1))) - d(3, 1) * d(3, 2) * sq(d(4, 3));
  }
}

/// h_jji = c_j * h_44i for j = 1, 2, 3 (c_4 = 1).
template <class C>
auto relation_coefficient(const C& c, int j) {
  auto d = [&](int a, int b) { return c.d(a, b); };
  switch (j) {
    case 1:
      return -(d(4, 3) * d(4, 2)) / (d(3, 1) * d(2, 1));
    case 2:
      return (d(4, 3) * d(4, 1)) / (d(2, 1) * d(3, 2));
    case 3:
      return -(d(4, 2) * d(4, 1)) / (d(3, 1) * d(3, 2));
    default:
      return c.k(1) + c.k(0) * d(2, 1);
  }
}

/// Coefficient X_ij of vol in d(theta_ij), 1 <= i < j <= 4.
template <class C>
auto X(const C& c, int i, int j) {
  auto d = [&](int a, int b) { return c.d(a, b); };
  auto h4 = [&](int k) { return sq(c.h(4, 4, k)); };
  auto hh = [&](int a, int b, int e) { return sq(c.h(a, b, e)); };
  const auto D = sq(d(1, 2)) * sq(d(1, 3)) * sq(d(2, 3));
  const auto two = c.k(2);
  const int key = 10 * i + j;
  switch (key) {
    case 12:
      return (d(3, 4) * (sq(d(1, 3)) * d(2, 3) - sq(d(1, 4)) * d(2, 4)) * h4(1) +
              d(3, 4) * (sq(d(2, 3)) * d(1, 3) - sq(d(2, 4)) * d(1, 4)) * h4(2) +
              d(1, 4) * d(2, 4) * sq(d(3, 4)) * h4(3) + d(1, 3) * d(2, 3) * sq(d(3, 4)) * h4(4)) /
                 D +
             two * hh(1, 2, 3) / (d(1, 3) * d(2, 3)) + two * hh(1, 2, 4) / (d(1, 4) * d(2, 4)) - c.R(1, 2);
    case 13:
      return -(d(2, 4) * (sq(d(1, 2)) * d(2, 3) + sq(d(1, 4)) * d(3, 4)) * h4(1)) / D +
             d(2, 4) * (d(1, 2) * sq(d(2, 3)) - d(1, 4) * sq(d(3, 4))) * h4(3) / D +
             d(1, 4) * sq(d(2, 4)) * d(3, 4) * h4(2) / D - d(1, 2) * sq(d(2, 4)) * d(2, 3) * h4(4) / D -
             two * hh(1, 2, 3) / (d(1, 2) * d(2, 3)) + two * hh(1, 3, 4) / (d(1, 4) * d(3, 4)) - c.R(1, 3);
    case 14:
      return d(2, 3) * (sq(d(1, 3)) * d(3, 4) - sq(d(1, 2)) * d(2, 4)) * h4(1) / D -
             d(3, 4) * h4(2) / (sq(d(1, 2)) * d(1, 3)) - d(2, 4) * h4(3) / (d(1, 2) * sq(d(1, 3))) +
             d(2, 3) * (d(1, 2) * sq(d(2, 4)) - d(1, 3) * sq(d(3, 4))) * h4(4) / D -
             two * hh(1, 2, 4) / (d(1, 2) * d(2, 4)) - two * hh(1, 3, 4) / (d(1, 3) * d(3, 4)) - c.R(1, 4);
    case 23:
      return sq(d(1, 4)) * d(2, 4) * d(3, 4) * h4(1) / D +
             sq(d(1, 4)) * h4(4) / (d(1, 2) * d(1, 3) * sq(d(2, 3))) -
             d(1, 4) * (sq(d(2, 4)) * d(3, 4) + sq(d(1, 2)) * d(1, 3)) * h4(2) / D -
             d(1, 4) * (d(2, 4) * sq(d(3, 4)) + d(1, 2) * sq(d(1, 3))) * h4(3) / D +
             two * hh(1, 2, 3) / (d(1, 2) * d(1, 3)) + two * hh(2, 3, 4) / (d(2, 4) * d(3, 4)) - c.R(2, 3);
    case 24:
      return -(d(3, 4) * h4(1)) / (sq(d(1, 2)) * d(2, 3)) + d(1, 4) * h4(3) / (d(1, 2) * sq(d(2, 3))) +
             d(1, 3) * (d(3, 4) * sq(d(2, 3)) - d(1, 4) * sq(d(1, 2))) * h4(2) / D -
             d(1, 3) * (d(2, 3) * sq(d(3, 4)) + d(1, 2) * sq(d(1, 4))) * h4(4) / D +
             two * hh(1, 2, 4) / (d(1, 2) * d(1, 4)) - two * hh(2, 3, 4) / (d(2, 3) * d(3, 4)) - c.R(2, 4);
    default:
      return d(2, 4) * h4(1) / (sq(d(1, 3)) * d(2, 3)) + d(1, 4) * h4(2) / (d(1, 3) * sq(d(2, 3))) +
             d(1, 2) * (sq(d(2, 3)) * d(2, 4) - sq(d(1, 3)) * d(1, 4)) * h4(3) / D +
             d(1, 2) * (d(2, 3) * sq(d(2, 4)) - d(1, 3) * sq(d(1, 4))) * h4(4) / D +
             two * hh(1, 3, 4) / (d(1, 3) * d(1, 4)) + two * hh(2, 3, 4) / (d(2, 3) * d(2, 4)) - c.R(3, 4);
  }
}

/// Scalar curvature R_M = 2 * sum_{i<j} R_ijij.
template <class C>
auto scalar_curvature(const C& c) {
  auto s = c.R(1, 2);
  for (auto [i, j] : {std::pair{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}) s = s + c.R(i, j);
  return c.k(2) * s;
}

/// Coefficient of vol in d(Phi): sum_i L_i h44i^2 - R_M / 2.
template <class C>
auto dphi(const C& c) {
  const auto g = gamma(c);
  auto s = gamma_L(c, 1) / g * sq(c.h(4, 4, 1));
  for (int i = 2; i <= 4; ++i) s = s + gamma_L(c, i) / g * sq(c.h(4, 4, i));
  return s - scalar_curvature(c) / c.k(2);
}

/// Bracket multiplying h44i in omega_i ^ Phi.
template <class C>
auto bracket(const C& c, int i) {
  auto d = [&](int a, int b) { return c.d(a, b); };
  const auto one = c.k(1);
  switch (i) {
    case 1:
      return -(d(4, 3) * d(4, 1)) / (d(3, 2) * sq(d(2, 1))) + d(4, 2) * d(4, 1) / (d(3, 2) * sq(d(3, 1))) -
             one / d(4, 1);
    case 2:
      return d(4, 2) * d(4, 1) / (d(3, 1) * sq(d(3, 2))) - one / d(4, 2) -
             d(4, 3) * d(4, 2) / (d(3, 1) * sq(d(2, 1)));
    case 3:
      return -(one / d(4, 3)) + d(4, 3) * d(4, 1) / (sq(d(3, 2)) * d(2, 1)) -
             d(4, 3) * d(4, 2) / (sq(d(3, 1)) * d(2, 1));
    default:
      return -(d(4, 3) * d(4, 2)) / (d(3, 1) * d(2, 1) * d(4, 1)) +
             d(4, 3) * d(4, 1) / (d(2, 1) * d(3, 2) * d(4, 2)) -
             d(4, 2) * d(4, 1) / (d(3, 1) * d(3, 2) * d(4, 3));
  }
}

/// g_i = m0 h44i for g = (l2-l1)^2.
template <class C>
auto m0(const C& c) {
  auto d = [&](int a, int b) { return c.d(a, b); };
  return c.k(2) * d(4, 3) * (d(4, 1) / d(3, 2) + d(4, 2) / d(3, 1));
}

/// f_i = m1 h44i for f = (l3-l2)^2.
template <class C>
auto m1(const C& c) {
  auto d = [&](int a, int b) { return c.d(a, b); };
  return -(c.k(2) * d(4, 1) * (d(4, 2) / d(3, 1) + d(4, 3) / d(2, 1)));
}

/// Singular parts of dg ^ Phi as g -> 0: B1, B2 (B3 = B4 = 0).
template <class C>
auto B_g(const C& c, int i) {
  auto d = [&](int a, int b) { return c.d(a, b); };
  if (i == 1) return -(m0(c) * d(4, 3) * d(4, 1)) / (d(3, 2) * sq(d(2, 1)));
  if (i == 2) return -(m0(c) * d(4, 3) * d(4, 2)) / (d(3, 1) * sq(d(2, 1)));
  return c.k(0) * d(2, 1);
}

/// Singular parts of df ^ Phi as f -> 0: B2, B3 (B1 = B4 = 0).
template <class C>
auto B_f(const C& c, int i) {
  auto d = [&](int a, int b) { return c.d(a, b); };
  if (i == 2) return m1(c) * d(4, 2) * d(4, 1) / (d(3, 1) * sq(d(3, 2)));
  if (i == 3) return m1(c) * d(4, 3) * d(4, 1) / (sq(d(3, 2)) * d(2, 1));
  return c.k(0) * d(2, 1);
}

/// Bounded remainders G_i = m * bracket_i - B_i.
template <class C>
auto G_g(const C& c, int i) {
  return m0(c) * bracket(c, i) - B_g(c, i);
}

template <class C>
auto G_f(const C& c, int i) {
  return m1(c) * bracket(c, i) - B_f(c, i);
}

}  // namespace isocert::frameforms::stated
