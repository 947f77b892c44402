#pragma once

// Principal branches of the inverse hyperbolic functions.
//
//   arcsinh z = sign(x) arccosh(a) + i arcsin(b)       (cofocal a, b)
//   arccosh z = arccosh(alpha) + i sign(y) arccos(beta) (focal alpha, beta)
//   arccsch z = arcsinh(1/z),  arcsech z = arccosh(1/z)
//   arctanh z = -i arctan(iz), arccoth z = i arccot(iz)
//
// The reflections follow from these and read
//   arccosh(-z) = arccosh(z) - i sign(y) pi   (z not in [1, inf))
//   arcsech(-z) = arcsech(z) + i sign(y) pi   (z not in (0, 1])
// which is the opposite sign to DLMF 4.37.11 and 4.37.14 as published.

#include <cmath>

#include "cutplane/complex.hpp"
#include "cutplane/focal.hpp"
#include "cutplane/inverse_trig.hpp"

namespace cutplane {

inline Complex arcsinh(const Complex& z) {
  const auto c = cofocal_coords(z);
  const double re = detail::acosh_from_deficit(c.a, c.a_minus_one);
  const double im = std::atan2(z.y, c.a_sqrt_1_minus_b2());
  return detail::checked({std::copysign(re, z.x), im}, "arcsinh");
}

inline Complex arccosh(const Complex& z) {
  const auto f = focal_coords(z);
  const double re = detail::acosh_from_deficit(f.alpha, f.alpha_minus_one);
  const double im = std::atan2(f.alpha_sqrt_1_minus_beta2(), z.x);
  return detail::checked({re, std::copysign(im, z.y)}, "arccosh");
}

/// arcsinh(1/z); 0 is a branch point.
inline Complex arccsch(const Complex& z) {
  detail::require_finite(z, "arccsch");
  Complex w = arcsinh(reciprocal(z));
  if (detail::on_unit_real_segment(mul_neg_i(z))) w.x = std::copysign(detail::asech_real(std::fabs(z.y)), w.x);
  return w;
}

/// arccosh(1/z); 0 is a branch point.
inline Complex arcsech(const Complex& z) {
  detail::require_finite(z, "arcsech");
  Complex w = arccosh(reciprocal(z));
  if (detail::on_unit_real_segment(z)) w.x = detail::asech_real(std::fabs(z.x));
  return w;
}

/// -i arctan(iz). Branch points +-1; the rotation i(x + iy) = -y + ix moves
/// the zero sign of y onto the real part, so cut sides carry over.
inline Complex arctanh(const Complex& z) {
  detail::require_finite(z, "arctanh");
  if (z.y == 0 && std::fabs(z.x) == 1.0) throw error(errc::branch_point, "arctanh at z = +-1");
  return mul_neg_i(arctan(mul_i(z)));
}

/// i arccot(iz); for y != 0 this is
///   ln(((x+1)^2 + y^2)/((x-1)^2 + y^2))/4 + (i/2)(arctan((x-1)/y) - arctan((x+1)/y)).
inline Complex arccoth(const Complex& z) {
  detail::require_finite(z, "arccoth");
  if (z.y == 0 && std::fabs(z.x) == 1.0) throw error(errc::branch_point, "arccoth at z = +-1");
  return mul_i(arccot(mul_i(z)));
}

}  // namespace cutplane
