#pragma once

// High-precision reference evaluations of the chaotic maps. These are written
// from the map equations directly and share no code with the library.

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cstddef>
#include <vector>

namespace oracle {

using Real = boost::multiprecision::cpp_dec_float_50;

struct Point {
  Real x;
  Real y;
  Real k;  // chord slope leaving this point
};

inline Real tangent_slope(const Point& p, const Real& mu) { return -(p.x / p.y) * mu * mu; }

/// Chord-reflection step: new point from `prev` along slope prev.k, new slope
/// from reflecting about the tangent at `delayed`.
inline Point step(const Point& prev, const Point& delayed, const Real& mu) {
  const Real mu2 = mu * mu;
  const Real& k = prev.k;
  Point next;
  next.x = -(2 * k * prev.y + prev.x * (mu2 - k * k)) / (mu2 + k * k);
  next.y = k * (next.x - prev.x) + prev.y;
  const Real t = tangent_slope(delayed, mu);
  next.k = (2 * t - k + k * t * t) / (1 + 2 * k * t - t * t);
  return next;
}

inline Point initial_point(double x0, double mu_d, double alpha_d) {
  const Real x(x0), mu(mu_d), alpha(alpha_d);
  Point p;
  p.x = x;
  p.y = mu * sqrt(1 - x * x);
  const Real t0 = tangent_slope(p, mu);
  const Real ta = tan(alpha);
  p.k = -(ta + t0) / (1 - t0 * ta);
  return p;
}

/// Points 0..n of the orbit (index 0 is the seed point).
inline std::vector<Point> tdercs_orbit(double x0, double mu_d, double alpha_d, int delay,
                                       std::size_t n) {
  const Real mu(mu_d);
  std::vector<Point> pts{initial_point(x0, mu_d, alpha_d)};
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t src = i < static_cast<std::size_t>(delay) ? i - 1 : i - delay;
    pts.push_back(step(pts[i - 1], pts[src], mu));
  }
  return pts;
}

inline Real nca_step(double x_d, double alpha_d, double beta_d) {
  const Real x(x_d), a(alpha_d), b(beta_d);
  const Real gain = (1 - pow(b, -4)) / tan(a / (1 + b)) * pow(1 + 1 / b, b);
  return gain * tan(a * x) * pow(1 - x, b);
}

}  // namespace oracle
