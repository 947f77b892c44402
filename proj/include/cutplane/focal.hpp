#pragma once

// Focal (foci +-1) and cofocal (foci +-i) coordinates.
//
// For foci +-1 with r1 = |z - 1| and r2 = |z + 1|:
//   alpha = (r1 + r2)/2 >= 1,   beta = (r2 - r1)/2 in [-1, 1],
// so z = alpha*beta + i*sign(y)*sqrt((alpha^2 - 1)(1 - beta^2)). Every branch
// formula needs sqrt(alpha^2 - 1) and alpha*sqrt(1 - beta^2), which lose half
// their digits near the real axis when formed from alpha and beta directly.
// The deficits alpha - 1 and alpha - |x| are therefore built from the two
// distances without subtraction of nearly equal quantities.

#include <algorithm>
#include <cmath>

#include "cutplane/complex.hpp"

namespace cutplane {

namespace detail {

// sqrt(p*q) without overflow in the product.
inline double sqrt_product(double p, double q) noexcept {
  const double pq = p * q;
  if (std::isfinite(pq) && (pq == 0 ? (p == 0 || q == 0) : std::isnormal(pq))) return std::sqrt(pq);
  return std::sqrt(p) * std::sqrt(q);
}

struct FocalKernel {
  double near_dist;    // distance to the focus on the same side as u
  double far_dist;     // distance to the opposite focus
  double alpha;
  double beta;         // u / alpha, clamped, carries the zero sign of u
  double alpha_m1;     // alpha - 1
  double alpha_m_abs;  // alpha - |u|
};

// Kernel for the point u + iv with foci at +-1 on the u axis.
inline FocalKernel focal_kernel(double u, double v) noexcept {
  const double au = std::fabs(u), av = std::fabs(v);
  const double far = std::hypot(au + 1.0, av);
  const double near = std::hypot(au - 1.0, av);
  // far - (au + 1) = v^2 / (far + au + 1)
  const double far_excess = av * (av / (far + au + 1.0));
  double am1, amx;
  if (au < 1.0) {
    const double near_excess = av == 0 ? 0.0 : av * (av / (near + (1.0 - au)));
    am1 = 0.5 * (far_excess + near_excess);
    amx = 0.5 * (far_excess + near + (1.0 - au));
  } else {
    const double denom = near + (au - 1.0);
    const double near_excess = denom == 0 ? 0.0 : av * (av / denom);
    am1 = 0.5 * (far_excess + near + (au - 1.0));
    amx = 0.5 * (far_excess + near_excess);
  }
  const double alpha = 1.0 + am1;
  const double beta = std::copysign(std::min(au / alpha, 1.0), u);
  return {near, far, alpha, beta, am1, amx};
}

}  // namespace detail

/// Focal coordinates for foci +-1.
struct FocalCoords {
  double r1 = 0;  ///< |z - 1|
  double r2 = 0;  ///< |z + 1|
  double alpha = 1;
  double beta = 0;
  double alpha_minus_one = 0;
  double one_minus_abs_beta = 1;
  double alpha_minus_abs_x = 1;

  /// sqrt(alpha^2 - 1)
  double sqrt_alpha2_minus_1() const noexcept {
    return detail::sqrt_product(alpha_minus_one, alpha_minus_one + 2.0);
  }
  /// alpha * sqrt(1 - beta^2)
  double alpha_sqrt_1_minus_beta2() const noexcept {
    return detail::sqrt_product(alpha_minus_abs_x, alpha + std::fabs(alpha * beta));
  }
};

/// Cofocal coordinates for foci +-i; the same construction with the axes swapped.
struct CofocalCoords {
  double rho1 = 0;  ///< |z - i|
  double rho2 = 0;  ///< |z + i|
  double a = 1;
  double b = 0;
  double a_minus_one = 0;
  double one_minus_abs_b = 1;
  double a_minus_abs_y = 1;

  double sqrt_a2_minus_1() const noexcept { return detail::sqrt_product(a_minus_one, a_minus_one + 2.0); }
  /// a * sqrt(1 - b^2)
  double a_sqrt_1_minus_b2() const noexcept {
    return detail::sqrt_product(a_minus_abs_y, a + std::fabs(a * b));
  }
};

inline FocalCoords focal_coords(const Complex& z) {
  detail::require_finite(z, "focal_coords");
  const auto k = detail::focal_kernel(z.x, z.y);
  FocalCoords f;
  // for x >= 0 the near focus is +1
  const bool right = !std::signbit(z.x);
  f.r1 = right ? k.near_dist : k.far_dist;
  f.r2 = right ? k.far_dist : k.near_dist;
  f.alpha = k.alpha;
  f.beta = k.beta;
  f.alpha_minus_one = k.alpha_m1;
  f.alpha_minus_abs_x = k.alpha_m_abs;
  f.one_minus_abs_beta = std::clamp(k.alpha_m_abs / k.alpha, 0.0, 1.0);
  return f;
}

inline CofocalCoords cofocal_coords(const Complex& z) {
  detail::require_finite(z, "cofocal_coords");
  const auto k = detail::focal_kernel(z.y, z.x);
  CofocalCoords c;
  const bool upper = !std::signbit(z.y);
  c.rho1 = upper ? k.near_dist : k.far_dist;
  c.rho2 = upper ? k.far_dist : k.near_dist;
  c.a = k.alpha;
  c.b = k.beta;
  c.a_minus_one = k.alpha_m1;
  c.a_minus_abs_y = k.alpha_m_abs;
  c.one_minus_abs_b = std::clamp(k.alpha_m_abs / k.alpha, 0.0, 1.0);
  return c;
}

struct FocalPartials {
  double alpha_x;
  double beta_x;
};

struct CofocalPartials {
  double a_y;
  double b_y;
};

namespace detail {

inline FocalPartials focal_partials_impl(double alpha, double beta, double am1, double omb) {
  const double abs_beta = std::fabs(beta);
  // alpha^2 - beta^2 = (alpha - |beta|)(alpha + |beta|); alpha - |beta| = am1 + omb
  const double denom = (am1 + omb) * (alpha + abs_beta);
  const double a2m1 = am1 * (alpha + 1.0);
  const double omb2 = omb * (1.0 + abs_beta);
  return {beta * a2m1 / denom, alpha * omb2 / denom};
}

}  // namespace detail

/// d(alpha)/dx and d(beta)/dx. Singular at z = +-1.
inline FocalPartials focal_partials(const Complex& z) {
  detail::require_finite(z, "focal_partials");
  if (z.y == 0 && std::fabs(z.x) == 1.0) throw error(errc::singularity, "focal_partials at z = +-1");
  const auto f = focal_coords(z);
  return detail::focal_partials_impl(f.alpha, f.beta, f.alpha_minus_one, f.one_minus_abs_beta);
}

/// d(a)/dy and d(b)/dy. Singular at z = +-i.
inline CofocalPartials cofocal_partials(const Complex& z) {
  detail::require_finite(z, "cofocal_partials");
  if (z.x == 0 && std::fabs(z.y) == 1.0) throw error(errc::singularity, "cofocal_partials at z = +-i");
  const auto c = cofocal_coords(z);
  const auto p = detail::focal_partials_impl(c.a, c.b, c.a_minus_one, c.one_minus_abs_b);
  return {p.alpha_x, p.beta_x};
}

}  // namespace cutplane
