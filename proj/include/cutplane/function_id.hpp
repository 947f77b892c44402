#pragma once

// Tags for the seventeen functions and the geometry of their cut planes.

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <string_view>

#include "cutplane/inverse_hyperbolic.hpp"
#include "cutplane/inverse_trig.hpp"
#include "cutplane/sqrt_branches.hpp"

namespace cutplane {

enum class FunctionId {
  X1, X2, X, Y, Z,
  arcsin, arccos, arccsc, arcsec, arctan, arccot,
  arcsinh, arccosh, arccsch, arcsech, arctanh, arccoth,
};

inline constexpr std::array<FunctionId, 17> all_functions = {
    FunctionId::X1,      FunctionId::X2,      FunctionId::X,       FunctionId::Y,       FunctionId::Z,
    FunctionId::arcsin,  FunctionId::arccos,  FunctionId::arccsc,  FunctionId::arcsec,  FunctionId::arctan,
    FunctionId::arccot,  FunctionId::arcsinh, FunctionId::arccosh, FunctionId::arccsch, FunctionId::arcsech,
    FunctionId::arctanh, FunctionId::arccoth,
};

inline constexpr std::array<FunctionId, 12> inverse_functions = {
    FunctionId::arcsin,  FunctionId::arccos,  FunctionId::arccsc,  FunctionId::arcsec,
    FunctionId::arctan,  FunctionId::arccot,  FunctionId::arcsinh, FunctionId::arccosh,
    FunctionId::arccsch, FunctionId::arcsech, FunctionId::arctanh, FunctionId::arccoth,
};

inline constexpr std::array<FunctionId, 5> sqrt_functions = {
    FunctionId::X1, FunctionId::X2, FunctionId::X, FunctionId::Y, FunctionId::Z,
};

constexpr std::string_view name(FunctionId f) noexcept {
  constexpr std::array<std::string_view, 17> names = {
      "X1",     "X2",     "X",       "Y",       "Z",       "arcsin",  "arccos",  "arccsc",  "arcsec",
      "arctan", "arccot", "arcsinh", "arccosh", "arccsch", "arcsech", "arctanh", "arccoth",
  };
  return names[static_cast<std::size_t>(f)];
}

inline std::optional<FunctionId> parse_function(std::string_view s) noexcept {
  for (auto f : all_functions)
    if (name(f) == s) return f;
  if (s == "sqrt_zm1") return FunctionId::X1;
  if (s == "sqrt_zp1") return FunctionId::X2;
  if (s == "sqrt_z2m1") return FunctionId::X;
  if (s == "sqrt_1mz2") return FunctionId::Y;
  if (s == "sqrt_1pz2") return FunctionId::Z;
  return std::nullopt;
}

inline Complex evaluate(FunctionId f, const Complex& z) {
  switch (f) {
    case FunctionId::X1: return sqrt_zm1(z);
    case FunctionId::X2: return sqrt_zp1(z);
    case FunctionId::X: return sqrt_z2m1(z);
    case FunctionId::Y: return sqrt_1mz2(z);
    case FunctionId::Z: return sqrt_1pz2(z);
    case FunctionId::arcsin: return arcsin(z);
    case FunctionId::arccos: return arccos(z);
    case FunctionId::arccsc: return arccsc(z);
    case FunctionId::arcsec: return arcsec(z);
    case FunctionId::arctan: return arctan(z);
    case FunctionId::arccot: return arccot(z);
    case FunctionId::arcsinh: return arcsinh(z);
    case FunctionId::arccosh: return arccosh(z);
    case FunctionId::arccsch: return arccsch(z);
    case FunctionId::arcsech: return arcsech(z);
    case FunctionId::arctanh: return arctanh(z);
    case FunctionId::arccoth: return arccoth(z);
  }
  throw error(errc::precondition, "unknown function id");
}

// ---------------------------------------------------------------------------
// Cut geometry

enum class Axis { real, imag };

/// Open interval of one coordinate axis removed from the plane.
struct CutSegment {
  Axis axis;
  double lo;
  double hi;
};

struct CutGeometry {
  std::span<const CutSegment> cuts;
  std::span<const Complex> branch_points;
  /// Branch points at which the function is unbounded (excluded from the domain).
  std::span<const Complex> poles;
};

namespace detail {

inline constexpr double inf = HUGE_VAL;

inline constexpr CutSegment cut_x1[] = {{Axis::real, -inf, 1.0}};
inline constexpr CutSegment cut_x2[] = {{Axis::real, -inf, -1.0}};
inline constexpr CutSegment cut_real_unit[] = {{Axis::real, -1.0, 1.0}};
inline constexpr CutSegment cut_real_outer[] = {{Axis::real, -inf, -1.0}, {Axis::real, 1.0, inf}};
inline constexpr CutSegment cut_imag_outer[] = {{Axis::imag, -inf, -1.0}, {Axis::imag, 1.0, inf}};
inline constexpr CutSegment cut_imag_unit[] = {{Axis::imag, -1.0, 1.0}};
inline constexpr CutSegment cut_below_one[] = {{Axis::real, -inf, 1.0}};
inline constexpr CutSegment cut_sech[] = {{Axis::real, -inf, 0.0}, {Axis::real, 1.0, inf}};

inline constexpr Complex bp_p1[] = {{1.0, 0.0}};
inline constexpr Complex bp_m1[] = {{-1.0, 0.0}};
inline constexpr Complex bp_pm1[] = {{-1.0, 0.0}, {1.0, 0.0}};
inline constexpr Complex bp_pmi[] = {{0.0, -1.0}, {0.0, 1.0}};
inline constexpr Complex bp_0[] = {{0.0, 0.0}};
inline constexpr Complex bp_0_pm1[] = {{-1.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}};
inline constexpr Complex bp_0_pmi[] = {{0.0, -1.0}, {0.0, 0.0}, {0.0, 1.0}};

}  // namespace detail

inline CutGeometry geometry(FunctionId f) noexcept {
  using namespace detail;
  switch (f) {
    case FunctionId::X1: return {cut_x1, bp_p1, {}};
    case FunctionId::X2: return {cut_x2, bp_m1, {}};
    case FunctionId::X: return {cut_real_unit, bp_pm1, {}};
    case FunctionId::Y:
    case FunctionId::arcsin:
    case FunctionId::arccos: return {cut_real_outer, bp_pm1, {}};
    case FunctionId::Z:
    case FunctionId::arcsinh: return {cut_imag_outer, bp_pmi, {}};
    case FunctionId::arccsc:
    case FunctionId::arcsec: return {cut_real_unit, bp_0_pm1, bp_0};
    case FunctionId::arctan: return {cut_imag_outer, bp_pmi, bp_pmi};
    case FunctionId::arccot: return {cut_imag_unit, bp_pmi, bp_pmi};
    case FunctionId::arccosh: return {cut_below_one, bp_pm1, {}};
    case FunctionId::arccsch: return {cut_imag_unit, bp_0_pmi, bp_0};
    case FunctionId::arcsech: return {cut_sech, bp_0_pm1, bp_0};
    case FunctionId::arctanh: return {cut_real_outer, bp_pm1, bp_pm1};
    case FunctionId::arccoth: return {cut_real_unit, bp_pm1, bp_pm1};
  }
  return {};
}

enum class PointKind { interior, cut, branch_point, pole };

constexpr std::string_view to_string(PointKind k) noexcept {
  switch (k) {
    case PointKind::interior: return "ok";
    case PointKind::cut: return "cut";
    case PointKind::branch_point: return "branch-point";
    case PointKind::pole: return "branch-point";
  }
  return "ok";
}

/// Classify z against the cut plane of f: exactly on a cut (either zero
/// sign), at a branch point, or in the open domain.
inline PointKind classify(FunctionId f, const Complex& z) noexcept {
  const auto g = geometry(f);
  for (const auto& p : g.poles)
    if (z == p) return PointKind::pole;
  for (const auto& p : g.branch_points)
    if (z == p) return PointKind::branch_point;
  for (const auto& c : g.cuts) {
    const double along = c.axis == Axis::real ? z.x : z.y;
    const double across = c.axis == Axis::real ? z.y : z.x;
    if (across == 0 && along > c.lo && along < c.hi) return PointKind::cut;
  }
  return PointKind::interior;
}

/// Euclidean distance from z to the nearest cut or branch point of f.
inline double distance_to_cuts(FunctionId f, const Complex& z) noexcept {
  const auto g = geometry(f);
  double d = HUGE_VAL;
  for (const auto& p : g.branch_points) d = std::fmin(d, std::hypot(z.x - p.x, z.y - p.y));
  for (const auto& c : g.cuts) {
    const double along = c.axis == Axis::real ? z.x : z.y;
    const double across = c.axis == Axis::real ? z.y : z.x;
    const double clamped = std::fmin(std::fmax(along, c.lo), c.hi);
    d = std::fmin(d, std::hypot(along - clamped, across));
  }
  return d;
}

}  // namespace cutplane
