#pragma once

#include <array>
#include <cmath>
#include <utility>

#include "isocert/configsolve/configsolve.hpp"

namespace isocert::oracle {

using Vec = std::array<double, 4>;

inline double p3(const Vec& l) {
  double s = 0.0;
  for (double x : l) s += x * x * x;
  return s;
}

inline Vec normalized(Vec v) {
  double n = 0.0;
  for (double x : v) n += x * x;
  n = std::sqrt(n);
  for (double& x : v) x /= n;
  return v;
}

// Orthonormal pair spanning {sum = 0} intersected with the system's linear constraint.
inline std::pair<Vec, Vec> plane(configsolve::SystemTag tag) {
  switch (tag) {
    case configsolve::SystemTag::I: return {normalized({1, 0, -1, 0}), normalized({1, 1, 1, -3})};
    case configsolve::SystemTag::II: return {normalized({1, 0, 0, -1}), normalized({1, -1, -1, 1})};
    default: return {normalized({0, 0, 1, -1}), normalized({1, 1, -1, -1})};
  }
}

// Independent count: walk the circle of radius sqrt(S) in the constraint plane,
// keep the sorted points, and count sign changes of p3 - A3 between neighbours.
inline int grid_count(configsolve::SystemTag tag, double S, double A3, int n = 400000) {
  const auto [u, v] = plane(tag);
  const double r = std::sqrt(S);
  auto point = [&](int k) {
    const double th = 2.0 * M_PI * k / n;
    Vec l;
    for (int i = 0; i < 4; ++i) l[i] = r * (std::cos(th) * u[i] + std::sin(th) * v[i]);
    return l;
  };
  auto sorted = [](const Vec& l) { return l[0] <= l[1] && l[1] <= l[2] && l[2] <= l[3]; };
  int count = 0;
  for (int k = 0; k < n; ++k) {
    const Vec a = point(k), b = point(k + 1);
    if (!sorted(a) || !sorted(b)) continue;
    if ((p3(a) - A3) * (p3(b) - A3) < 0.0) ++count;
  }
  return count;
}

}  // namespace isocert::oracle
