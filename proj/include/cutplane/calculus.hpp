#pragma once

// Closed-form derivatives and primitives. Everything composed here (Y(1/z),
// ln, arctanh, ...) goes through this library's own principal branches.

#include <cmath>

#include "cutplane/function_id.hpp"

namespace cutplane {

namespace detail {

inline bool reciprocal_family(FunctionId f) noexcept {
  return f == FunctionId::arccsc || f == FunctionId::arcsec || f == FunctionId::arccsch ||
         f == FunctionId::arcsech;
}

inline void require_open_domain(FunctionId f, const Complex& z, const char* who) {
  require_finite(z, who);
  const auto k = classify(f, z);
  if (k == PointKind::interior) return;
  const bool origin = z.x == 0 && z.y == 0;
  if (k == PointKind::pole || (origin && reciprocal_family(f)))
    throw error(errc::branch_point, std::string(who) + "(" + std::string(name(f)) + ") at a branch point");
  throw error(errc::singularity, std::string(who) + "(" + std::string(name(f)) + ") on a cut or branch point");
}

inline Complex inv(const Complex& w) { return Complex{1.0, 0.0} / w; }

inline Complex square(const Complex& z) noexcept {
  return {(z.x - z.y) * (z.x + z.y), 2.0 * z.x * z.y};
}

}  // namespace detail

/// f'(z) on the open domain of f.
inline Complex derivative(FunctionId f, const Complex& z) {
  using detail::inv;
  detail::require_open_domain(f, z, "derivative");
  const Complex one{1.0, 0.0};
  auto z2 = [&] { return detail::square(z); };
  switch (f) {
    case FunctionId::X1: return inv(2.0 * sqrt_zm1(z));
    case FunctionId::X2: return inv(2.0 * sqrt_zp1(z));
    case FunctionId::X: return z / sqrt_z2m1(z);
    case FunctionId::Y: return -(z / sqrt_1mz2(z));
    case FunctionId::Z: return z / sqrt_1pz2(z);
    case FunctionId::arcsin: return inv(sqrt_1mz2(z));
    case FunctionId::arccos: return -inv(sqrt_1mz2(z));
    case FunctionId::arccsc: return -inv(z2() * sqrt_1mz2(reciprocal(z)));
    case FunctionId::arcsec: return inv(z2() * sqrt_1mz2(reciprocal(z)));
    case FunctionId::arctan: return inv(one + z2());
    case FunctionId::arccot: return -inv(one + z2());
    case FunctionId::arcsinh: return inv(sqrt_1pz2(z));
    case FunctionId::arccosh: return inv(sqrt_z2m1(z));
    case FunctionId::arccsch: return -inv(z2() * sqrt_1pz2(reciprocal(z)));
    case FunctionId::arcsech: return -inv(z2() * sqrt_z2m1(reciprocal(z)));
    case FunctionId::arctanh:
    case FunctionId::arccoth: return inv(one - z2());
  }
  throw error(errc::precondition, "derivative: unknown function");
}

/// What antiderivative does when z is in the domain of f but the composing
/// log/arctanh/arctan term has its argument exactly on its own cut.
enum class PrimitiveCut {
  reject,     ///< throw errc::primitive_cut
  one_sided,  ///< return the limit selected by the zero signs
};

/// A primitive of f with C = 0.
///
/// The formulas are local primitives only. They are discontinuous wherever
/// the inner argument crosses the cut of the outer function:
///   arccsc, arcsec   arctanh(Y(1/z))  on the imaginary axis
///   arccsch          arctanh(Z(1/z))  on the real axis
///   arcsech          arctan(X(1/z))   on the imaginary axis
///   arccot           ln(1 + z^2)      on the imaginary axis, |y| > 1
///   arctanh, arccoth ln(z^2 - 1)      on [-1, 1] and the imaginary axis
inline Complex antiderivative(FunctionId f, const Complex& z, PrimitiveCut policy = PrimitiveCut::reject) {
  detail::require_open_domain(f, z, "antiderivative");
  const bool strict = policy == PrimitiveCut::reject;
  auto advisory = [&](bool on_cut) {
    if (on_cut && strict)
      throw error(errc::primitive_cut,
                  "antiderivative(" + std::string(name(f)) + "): primitive discontinuous at this point");
  };
  auto on_arctanh_cut = [](const Complex& w) { return w.y == 0 && std::fabs(w.x) >= 1.0; };
  auto on_arctan_cut = [](const Complex& w) { return w.x == 0 && std::fabs(w.y) >= 1.0; };
  auto on_log_cut = [](const Complex& w) { return w.y == 0 && w.x <= 0; };
  auto guarded = [&](auto&& fn) -> Complex {
    try {
      return fn();
    } catch (const error& e) {
      // inner term evaluated at its own branch point
      if (e.kind() == errc::branch_point) advisory(true);
      throw;
    }
  };
  const Complex one{1.0, 0.0};

  switch (f) {
    case FunctionId::arcsin: return z * arcsin(z) + sqrt_1mz2(z);
    case FunctionId::arccos: return z * arccos(z) - sqrt_1mz2(z);
    case FunctionId::arccsc:
    case FunctionId::arcsec: {
      const Complex w = sqrt_1mz2(reciprocal(z));
      advisory(on_arctanh_cut(w));
      const Complex t = guarded([&] { return arctanh(w); });
      return f == FunctionId::arccsc ? z * arccsc(z) + t : z * arcsec(z) - t;
    }
    case FunctionId::arctan:
    case FunctionId::arccot: {
      const Complex w = one + detail::square(z);
      advisory(on_log_cut(w));
      const Complex l = 0.5 * guarded([&] { return log(w); });
      return f == FunctionId::arctan ? z * arctan(z) - l : z * arccot(z) + l;
    }
    case FunctionId::arcsinh: return z * arcsinh(z) - sqrt_1pz2(z);
    case FunctionId::arccosh: return z * arccosh(z) - sqrt_z2m1(z);
    case FunctionId::arccsch: {
      const Complex w = sqrt_1pz2(reciprocal(z));
      advisory(on_arctanh_cut(w));
      return z * arccsch(z) + guarded([&] { return arctanh(w); });
    }
    case FunctionId::arcsech: {
      const Complex w = sqrt_z2m1(reciprocal(z));
      advisory(on_arctan_cut(w));
      return z * arcsech(z) - guarded([&] { return arctan(w); });
    }
    case FunctionId::arctanh:
    case FunctionId::arccoth: {
      const Complex w{std::fma(z.x, z.x, -1.0) - z.y * z.y, 2.0 * z.x * z.y};
      advisory(on_log_cut(w));
      const Complex l = 0.5 * guarded([&] { return log(w); });
      return (f == FunctionId::arctanh ? z * arctanh(z) : z * arccoth(z)) + l;
    }
    default: break;
  }
  throw error(errc::precondition, "antiderivative: defined for the twelve inverse functions only");
}

}  // namespace cutplane
