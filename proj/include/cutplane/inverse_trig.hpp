#pragma once

// Principal branches of the inverse trigonometric functions.
//
//   arcsin z = arcsin(beta) + i sign(y) arccosh(alpha)
//   arccos z = arccos(beta) - i sign(y) arccosh(alpha)
//   arccsc z = arcsin(1/z),  arcsec z = arccos(1/z)
//   arccot z = (arctan((y+1)/x) - arctan((y-1)/x))/2
//              + (i/4) ln((x^2 + (y-1)^2)/(x^2 + (y+1)^2))      (x != 0)
//   arctan z = sign(x) pi/2 - arccot z                         (x != 0)
//
// arcsin(beta) is evaluated as atan2(x, alpha sqrt(1 - beta^2)), which keeps
// full accuracy as |beta| -> 1.

#include <cmath>

#include "cutplane/complex.hpp"
#include "cutplane/focal.hpp"

namespace cutplane {

namespace detail {

/// arccosh(alpha) given alpha and the exact deficit alpha - 1.
inline double acosh_from_deficit(double alpha, double am1) noexcept {
  if (am1 < 1.0) return std::log1p(am1 + sqrt_product(am1, am1 + 2.0));
  return std::acosh(alpha);
}

/// arccoth(t) for |t| > 1.
inline double acoth_real(double t) noexcept {
  return std::copysign(0.5 * std::log1p(2.0 / (std::fabs(t) - 1.0)), t);
}

// Distances to +-i and the two pieces of the closed form. Shared by arctan
// and arccot so that their sum is exact in the imaginary part.
struct CotParts {
  double re;  // Re arccot z = atan2(2x, x^2 + y^2 - 1) / 2
  double im;  // Im arccot z = ln(rho1/rho2) / 2
};

inline CotParts arccot_parts(double x, double y) noexcept {
  // arctan(a) - arctan(b) = atan2(a - b, 1 + ab); with a, b = (y +- 1)/x and
  // both arguments scaled by x^2 this is atan2(2x, x^2 + y^2 - 1).
  const double d = std::fma(x, x, (y - 1.0) * (y + 1.0));
  const double re = 0.5 * std::atan2(2.0 * x, d);
  const double rho1 = std::hypot(x, y - 1.0);
  const double rho2 = std::hypot(x, y + 1.0);
  // rho1^2/rho2^2 = 1 - 4y/rho2^2
  const double t = (4.0 * y / rho2) / rho2;
  // on the real axis the ratio is exactly 1 and its logarithm +0
  if (y == 0) return {re, 0.0};
  const double im = std::fabs(t) < 0.5 ? 0.25 * std::log1p(-t) : 0.5 * std::log(rho1 / rho2);
  return {re, im};
}

/// arccosh(1/u) for 0 < u <= 1 without rounding 1/u first:
/// ln((1 + s)/u) = log1p((1 - u + s)/u) with s = sqrt((1 - u)(1 + u)).
inline double asech_real(double u) noexcept {
  const double s = sqrt_product(1.0 - u, 1.0 + u);
  return std::log1p((1.0 - u + s) / u);
}

/// True when z lies on the real segment 0 < |x| < 1 (either zero sign).
inline bool on_unit_real_segment(const Complex& z) noexcept {
  return z.y == 0 && z.x != 0 && std::fabs(z.x) < 1.0;
}

inline void reject_pm_i(const Complex& z, const char* who) {
  if (z.x == 0 && std::fabs(z.y) == 1.0) throw error(errc::branch_point, std::string(who) + " at z = +-i");
}

}  // namespace detail

inline Complex arcsin(const Complex& z) {
  const auto f = focal_coords(z);
  const double re = std::atan2(z.x, f.alpha_sqrt_1_minus_beta2());
  const double im = detail::acosh_from_deficit(f.alpha, f.alpha_minus_one);
  return detail::checked({re, std::copysign(im, z.y)}, "arcsin");
}

inline Complex arccos(const Complex& z) {
  const auto f = focal_coords(z);
  const double re = std::atan2(f.alpha_sqrt_1_minus_beta2(), z.x);
  const double im = detail::acosh_from_deficit(f.alpha, f.alpha_minus_one);
  return detail::checked({re, -std::copysign(im, z.y)}, "arccos");
}

/// arcsin(1/z); 0 is a branch point.
inline Complex arccsc(const Complex& z) {
  detail::require_finite(z, "arccsc");
  Complex w = arcsin(reciprocal(z));
  if (detail::on_unit_real_segment(z)) w.y = std::copysign(detail::asech_real(std::fabs(z.x)), w.y);
  return w;
}

/// arccos(1/z); 0 is a branch point.
inline Complex arcsec(const Complex& z) {
  detail::require_finite(z, "arcsec");
  Complex w = arccos(reciprocal(z));
  if (detail::on_unit_real_segment(z)) w.y = std::copysign(detail::asech_real(std::fabs(z.x)), w.y);
  return w;
}

/// Principal arccot, cut (-i, i). On the imaginary axis the zero sign of x
/// chooses the side: arccot(+-0 + iy) = +-pi/2 - i arctanh(y) for y^2 < 1.
inline Complex arccot(const Complex& z) {
  detail::require_finite(z, "arccot");
  detail::reject_pm_i(z, "arccot");
  if (z.x == 0) {
    if (std::fabs(z.y) < 1.0) return {std::copysign(half_pi, z.x), -std::atanh(z.y)};
    return {z.x, -detail::acoth_real(z.y)};
  }
  const auto p = detail::arccot_parts(z.x, z.y);
  return detail::checked({p.re, p.im}, "arccot");
}

/// Principal arctan, cuts (-i inf, -i] and [i, i inf).
inline Complex arctan(const Complex& z) {
  detail::require_finite(z, "arctan");
  detail::reject_pm_i(z, "arctan");
  if (z.x == 0) {
    if (std::fabs(z.y) < 1.0) return {z.x, std::atanh(z.y)};
    return {std::copysign(half_pi, z.x), detail::acoth_real(z.y)};
  }
  if (z.y == 0) return {std::atan(z.x), z.y};
  // sign(x) pi/2 - Re arccot z = atan2(2x, 1 - x^2 - y^2)/2
  const double d = std::fma(-z.x, z.x, (1.0 - z.y) * (1.0 + z.y));
  const double re = 0.5 * std::atan2(2.0 * z.x, d);
  const auto p = detail::arccot_parts(z.x, z.y);
  return detail::checked({re, -p.im}, "arctan");
}

/// Where z sits relative to the unit circle, judged on the computed x^2 + y^2.
enum class CircleRegion { inside, on, outside };

inline CircleRegion circle_region(const Complex& z) noexcept {
  const double r2 = z.x * z.x + z.y * z.y;
  return r2 < 1.0 ? CircleRegion::inside : (r2 == 1.0 ? CircleRegion::on : CircleRegion::outside);
}

/// Re arccot z by the inside / on / outside the unit circle case split.
/// Requires x != 0.
inline double re_arccot_region(const Complex& z) {
  detail::require_finite(z, "re_arccot_region");
  if (z.x == 0) throw error(errc::precondition, "re_arccot_region requires x != 0");
  const double s = sign(z.x);
  switch (circle_region(z)) {
    case CircleRegion::inside:
      return s * half_pi - 0.5 * std::atan(2.0 * z.x / (1.0 - z.x * z.x - z.y * z.y));
    case CircleRegion::on:
      return s * quarter_pi;
    case CircleRegion::outside:
      return 0.5 * std::atan(2.0 * z.x / (z.x * z.x + z.y * z.y - 1.0));
  }
  return 0;
}

}  // namespace cutplane
