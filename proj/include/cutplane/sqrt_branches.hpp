#pragma once

// The five principal square-root branches
//
//   sqrt_zm1  = X1(z) = sqrt(z - 1)   cut (-inf, 1)
//   sqrt_zp1  = X2(z) = sqrt(z + 1)   cut (-inf, -1)
//   sqrt_z2m1 = X(z)  = sqrt(z^2 - 1) cut (-1, 1)
//   sqrt_1mz2 = Y(z)  = sqrt(1 - z^2) cuts (-inf, -1) and (1, inf)
//   sqrt_1pz2 = Z(z)  = sqrt(1 + z^2) cuts (-i inf, -i) and (i, i inf)
//
// On a cut the value is the limit from the side named by the zero sign of the
// transverse coordinate. Branch points return their finite limit.

#include <cmath>

#include "cutplane/complex.hpp"
#include "cutplane/focal.hpp"

namespace cutplane {

namespace detail {

// Principal sqrt of u + iv where u, v are already formed; zero sign of v picks the side.
inline Complex principal_sqrt_parts(double u, double v) noexcept {
  const double r = std::hypot(u, v);
  if (r == 0) return {0.0, v};
  if (u >= 0) {
    const double t = std::sqrt(0.5 * (r + u));
    return {t, v / (2.0 * t)};
  }
  const double t = std::sqrt(0.5 * (r - u));
  return {std::fabs(v) / (2.0 * t), std::copysign(t, v)};
}

}  // namespace detail

/// X1(z), principal sqrt(z - 1).
inline Complex sqrt_zm1(const Complex& z) {
  detail::require_finite(z, "sqrt_zm1");
  return detail::checked(detail::principal_sqrt_parts(z.x - 1.0, z.y), "sqrt_zm1");
}

/// X2(z), principal sqrt(z + 1).
inline Complex sqrt_zp1(const Complex& z) {
  detail::require_finite(z, "sqrt_zp1");
  return detail::checked(detail::principal_sqrt_parts(z.x + 1.0, z.y), "sqrt_zp1");
}

/// X(z) = beta*sqrt(alpha^2 - 1) + i sign(y) alpha*sqrt(1 - beta^2).
inline Complex sqrt_z2m1(const Complex& z) {
  const auto f = focal_coords(z);
  const Complex w{f.beta * f.sqrt_alpha2_minus_1(), std::copysign(f.alpha_sqrt_1_minus_beta2(), z.y)};
  return detail::checked(w, "sqrt_z2m1");
}

/// Y(z) = alpha*sqrt(1 - beta^2) - i sign(y) beta*sqrt(alpha^2 - 1).
inline Complex sqrt_1mz2(const Complex& z) {
  const auto f = focal_coords(z);
  const double im = -(branch_sign(z.y) * f.beta) * f.sqrt_alpha2_minus_1();
  return detail::checked({f.alpha_sqrt_1_minus_beta2(), im}, "sqrt_1mz2");
}

/// Z(z) = a*sqrt(1 - b^2) + i sign(x) b*sqrt(a^2 - 1).
inline Complex sqrt_1pz2(const Complex& z) {
  const auto c = cofocal_coords(z);
  const double im = (branch_sign(z.x) * c.b) * c.sqrt_a2_minus_1();
  return detail::checked({c.a_sqrt_1_minus_b2(), im}, "sqrt_1pz2");
}

}  // namespace cutplane
