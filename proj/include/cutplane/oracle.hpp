#pragma once

// Reference computations used for differential testing:
//
//  * integral_value: adaptive quadrature of the defining integrals
//      arcsin z  = int_0^z dt/Y(t)     arccos z  = int_z^1 dt/Y(t)
//      arctan z  = int_0^z dt/(1+t^2)  arccot z  = int_z^inf dt/(1+t^2)
//      arcsinh z = int_0^z dt/Z(t)     arccosh z = int_1^z dt/X(t)
//    along axis-parallel paths that stay inside the cut plane;
//  * log_form: the principal-logarithm closed forms.
//
// Neither route shares code with the focal-coordinate formulas of the main
// functions beyond the square-root kernels.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "cutplane/calculus.hpp"
#include "cutplane/function_id.hpp"
#include "cutplane/quadrature.hpp"

namespace cutplane {

// ---------------------------------------------------------------------------
// Integration paths

/// One axis-parallel leg. The coordinate held fixed keeps its zero sign.
struct Leg {
  Complex from;
  Complex to;

  bool horizontal() const noexcept { return from.y == to.y; }
  bool degenerate() const noexcept { return from == to; }

  Complex at(double s) const noexcept {
    if (horizontal()) return {from.x + s * (to.x - from.x), from.y};
    return {from.x, from.y + s * (to.y - from.y)};
  }
  Complex tangent() const noexcept { return to - from; }
};

struct IntegrationPath {
  std::vector<Leg> legs;
  /// arccot only: real abscissa where the leg to infinity starts (0 = none).
  double tail_from = 0;
};

inline bool integral_defined(FunctionId f) noexcept {
  return f == FunctionId::arcsin || f == FunctionId::arccos || f == FunctionId::arctan ||
         f == FunctionId::arccot || f == FunctionId::arcsinh || f == FunctionId::arccosh;
}

namespace detail {

inline Complex integrand(FunctionId f, const Complex& t) {
  switch (f) {
    case FunctionId::arcsin:
    case FunctionId::arccos: return Complex{1.0, 0.0} / sqrt_1mz2(t);
    case FunctionId::arctan:
    case FunctionId::arccot: return Complex{1.0, 0.0} / (Complex{1.0, 0.0} + square(t));
    case FunctionId::arcsinh: return Complex{1.0, 0.0} / sqrt_1pz2(t);
    case FunctionId::arccosh: return Complex{1.0, 0.0} / sqrt_z2m1(t);
    default: break;
  }
  throw error(errc::precondition, "no integral definition for this function");
}

// distance from p to the leg, and whether the closest point is an interior point
inline double leg_distance(const Leg& leg, const Complex& p, bool& at_from, bool& at_to) {
  const Complex d = leg.tangent();
  const double len2 = d.x * d.x + d.y * d.y;
  double s = len2 == 0 ? 0.0 : ((p.x - leg.from.x) * d.x + (p.y - leg.from.y) * d.y) / len2;
  s = std::fmin(std::fmax(s, 0.0), 1.0);
  at_from = s == 0.0;
  at_to = s == 1.0;
  const Complex q{leg.from.x + s * d.x, leg.from.y + s * d.y};
  return std::hypot(p.x - q.x, p.y - q.y);
}

// A leg crosses a cut when its two ends sit on opposite sides of the cut
// line (sides judged with the zero sign) at a point inside the cut.
inline bool leg_crosses(const Leg& leg, const CutSegment& c) {
  const bool real_cut = c.axis == Axis::real;
  const double a0 = real_cut ? leg.from.y : leg.from.x;
  const double a1 = real_cut ? leg.to.y : leg.to.x;
  if (branch_sign(a0) == branch_sign(a1)) return false;
  // the crossing coordinate along the cut axis
  double along;
  const double b0 = real_cut ? leg.from.x : leg.from.y;
  const double b1 = real_cut ? leg.to.x : leg.to.y;
  if (b0 == b1) {
    along = b0;
  } else {
    // a transverse coordinate changes sign on a leg parallel to the cut only
    // when it moves between the two zeros, which cannot happen here
    return false;
  }
  return along >= c.lo && along <= c.hi;
}

// Smallest distance from a branch point to the path, ignoring contact at
// the path's own ends; negative when a leg crosses a cut.
inline double clearance(FunctionId f, const IntegrationPath& path) {
  const auto g = geometry(f);
  const std::size_t n = path.legs.size();
  double best = HUGE_VAL;
  for (std::size_t i = 0; i < n; ++i) {
    const Leg& leg = path.legs[i];
    for (const auto& c : g.cuts)
      if (leg_crosses(leg, c)) return -1.0;
    if (leg.degenerate()) continue;
    for (const auto& p : g.branch_points) {
      bool at_from = false, at_to = false;
      const double d = leg_distance(leg, p, at_from, at_to);
      const bool path_end = (at_from && i == 0) || (at_to && i + 1 == n);
      if (!path_end) best = std::fmin(best, d);
    }
  }
  return best;
}

// below this clearance a path is kept only as a fallback, since the
// quadrature error floor grows like 1/distance near a pole
inline constexpr double comfortable_clearance = 0.125;

inline IntegrationPath make_path(std::initializer_list<Complex> corners) {
  IntegrationPath p;
  const Complex* prev = nullptr;
  for (const auto& c : corners) {
    if (prev) p.legs.push_back({*prev, c});
    prev = &c;
  }
  return p;
}

inline void drop_degenerate(IntegrationPath& p) {
  std::erase_if(p.legs, [](const Leg& l) { return l.degenerate(); });
}

// Candidate rectilinear paths from s to e, most direct first.
inline std::vector<IntegrationPath> candidate_paths(Complex s, const Complex& e) {
  // the start point is not on a cut; give its zeros the end point's signs so
  // legs along an axis stay on the side that e names
  if (s.x == 0) s.x = std::copysign(0.0, e.x);
  if (s.y == 0) s.y = std::copysign(0.0, e.y);
  std::vector<IntegrationPath> out;
  out.push_back(make_path({s, Complex{s.x, e.y}, e}));
  out.push_back(make_path({s, Complex{e.x, s.y}, e}));
  const double heights[] = {0.5, 1.5, 3.0, std::fabs(e.y) + 1.0, std::fabs(e.x) + 1.0};
  for (double h : heights) {
    const double c = branch_sign(e.y) * h;
    out.push_back(make_path({s, Complex{s.x, c}, Complex{e.x, c}, e}));
  }
  for (double h : heights) {
    const double c = branch_sign(e.x) * h;
    out.push_back(make_path({s, Complex{c, s.y}, Complex{c, e.y}, e}));
  }
  return out;
}

// arccot: from z to the real axis, then out to infinity.
inline std::vector<IntegrationPath> candidate_cot_paths(const Complex& e) {
  std::vector<IntegrationPath> out;
  const double ground = std::copysign(0.0, e.y);
  if (e.x != 0) {
    auto p = make_path({e, Complex{e.x, ground}});
    p.tail_from = e.x;
    out.push_back(p);
  }
  const double heights[] = {1.0, 2.0, std::fabs(e.x) + 1.0};
  for (double h : heights) {
    const double c = branch_sign(e.x) * h;
    auto p = make_path({e, Complex{c, e.y}, Complex{c, ground}});
    p.tail_from = c;
    out.push_back(p);
  }
  return out;
}

}  // namespace detail

inline constexpr double default_path_margin = 1e-8;

/// Every admissible path for the defining integral of f ending (or, for
/// arccot, starting) at z. Paths that keep well clear of the branch points
/// come first, otherwise candidate order is kept.
inline std::vector<IntegrationPath> plan_paths(FunctionId f, const Complex& z,
                                               double margin = default_path_margin) {
  if (!integral_defined(f)) throw error(errc::precondition, "no integral definition for this function");
  std::vector<IntegrationPath> candidates;
  if (f == FunctionId::arccot) {
    candidates = detail::candidate_cot_paths(z);
  } else {
    const Complex start = (f == FunctionId::arccosh || f == FunctionId::arccos) ? Complex{1.0, 0.0}
                                                                                 : Complex{0.0, 0.0};
    candidates = detail::candidate_paths(start, z);
  }
  std::vector<std::pair<double, IntegrationPath>> scored;
  for (auto& p : candidates) {
    const double c = detail::clearance(f, p);
    if (c < margin) continue;
    detail::drop_degenerate(p);
    scored.emplace_back(std::fmin(c, detail::comfortable_clearance), std::move(p));
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<IntegrationPath> out;
  for (auto& [c, p] : scored) out.push_back(std::move(p));
  return out;
}

namespace detail {

inline bool singular_end(FunctionId f, const Complex& p) noexcept {
  for (const auto& b : geometry(f).branch_points)
    if (p == b) return true;
  return false;
}

// One leg. An inverse-square-root end singularity is removed with
// s = sigma^2 measured from that end; a leg singular at both ends is split.
inline QuadResult integrate_leg(FunctionId f, const Leg& leg, double tol) {
  const Complex dt = leg.tangent();
  const bool sa = singular_end(f, leg.from);
  const bool sb = singular_end(f, leg.to);
  auto plain = [&](double s) { return integrand(f, leg.at(s)) * dt; };
  auto near_from = [&](double sig) { return integrand(f, leg.at(sig * sig)) * ((2.0 * sig) * dt); };
  auto near_to = [&](double sig) {
    const double u = sig * sig;
    const Complex t = leg.horizontal() ? Complex{leg.to.x - u * dt.x, leg.to.y}
                                       : Complex{leg.to.x, leg.to.y - u * dt.y};
    return integrand(f, t) * ((2.0 * sig) * dt);
  };
  if (!sa && !sb) return integrate(plain, 0.0, 1.0, tol);
  if (sa && !sb) return integrate(near_from, 0.0, 1.0, tol);
  if (!sa && sb) return integrate(near_to, 0.0, 1.0, tol);
  const double h = std::sqrt(0.5);
  const auto r1 = integrate(near_from, 0.0, h, 0.5 * tol);
  const auto r2 = integrate(near_to, 0.0, h, 0.5 * tol);
  return {r1.value + r2.value, r1.err_estimate + r2.err_estimate, r1.segments + r2.segments};
}

}  // namespace detail

/// Integrate the defining integrand of f along a given path.
inline QuadResult integrate_path(FunctionId f, const IntegrationPath& path, double tol) {
  const std::size_t pieces = path.legs.size() + (path.tail_from != 0 ? 2 : 0);
  const double leg_tol = tol / static_cast<double>(pieces == 0 ? 1 : pieces);
  QuadResult total{Complex{0.0, 0.0}, 0.0, 0};
  for (const auto& leg : path.legs) {
    const auto r = detail::integrate_leg(f, leg, leg_tol);
    total.value = total.value + r.value;
    total.err_estimate += r.err_estimate;
    total.segments += r.segments;
  }
  if (path.tail_from != 0) {
    // int_c^{sign(c) inf} dt/(1+t^2): reach |t| = 1 on the real axis, then
    // t -> 1/t maps the rest onto int_0^{sign(c)} du/(1+u^2)
    auto real_kernel = [](double t) { return Complex{1.0 / (1.0 + t * t), 0.0}; };
    const double c = path.tail_from;
    const double unit = std::copysign(1.0, c);
    const double near_end = std::fabs(c) >= 1.0 ? 1.0 / c : unit;
    const auto r1 = integrate(real_kernel, 0.0, near_end, leg_tol);
    total.value = total.value + r1.value;
    total.err_estimate += r1.err_estimate;
    total.segments += r1.segments;
    if (std::fabs(c) < 1.0) {
      const auto r2 = integrate(real_kernel, c, unit, leg_tol);
      total.value = total.value + r2.value;
      total.err_estimate += r2.err_estimate;
      total.segments += r2.segments;
    }
  }
  return total;
}

namespace detail {

// f(z) in terms of f(-z), for functions with a reflection formula.
inline Complex reflect_value(FunctionId f, const Complex& z, const Complex& value_at_minus_z) {
  switch (f) {
    case FunctionId::arcsin:
    case FunctionId::arctan:
    case FunctionId::arccot:
    case FunctionId::arcsinh: return -value_at_minus_z;
    case FunctionId::arccos: return Complex{pi, 0.0} - value_at_minus_z;
    case FunctionId::arccosh:
      // arccosh(w) = arccosh(-w) - i sign(Im w) pi with w = -z
      return value_at_minus_z + Complex{0.0, branch_sign(z.y) * pi};
    default: break;
  }
  throw error(errc::path, "no reflection available");
}

}  // namespace detail

/// The defining integral of f evaluated by quadrature to absolute tolerance tol.
inline QuadResult integral_value(FunctionId f, const Complex& z, double tol) {
  detail::require_finite(z, "integral_value");
  if (!integral_defined(f)) throw error(errc::precondition, "no integral definition for this function");
  const auto kind = classify(f, z);
  if (kind == PointKind::pole) throw error(errc::branch_point, "integral_value at a branch point");
  const double orient = f == FunctionId::arccos ? -1.0 : 1.0;
  auto run = [&](const IntegrationPath& p) {
    auto r = integrate_path(f, p, tol);
    r.value = orient * r.value;
    return r;
  };
  auto paths = plan_paths(f, z);
  if (!paths.empty()) return run(paths.front());
  // reflect through the origin and retry
  const Complex mz = -z;
  const bool on_reflected_domain = !(f == FunctionId::arccosh && z.y == 0 && z.x <= -1.0);
  if (on_reflected_domain) {
    auto mirrored = plan_paths(f, mz);
    if (!mirrored.empty()) {
      auto r = run(mirrored.front());
      r.value = detail::reflect_value(f, z, r.value);
      return r;
    }
  }
  throw error(errc::path, "no admissible integration path");
}

// ---------------------------------------------------------------------------
// Principal-log closed forms

namespace detail {

inline Complex exp(const Complex& w) noexcept {
  const double m = std::exp(w.x);
  return {m * std::cos(w.y), m * std::sin(w.y)};
}

// exp(ln(w)/2), with the branch point mapped to its limit 0
inline Complex sqrt_via_log(const Complex& w) {
  if (w.x == 0 && w.y == 0) return {0.0, w.y};
  return exp(0.5 * log(w));
}

inline Complex asin_log(const Complex& z) {
  // -i ln(Y(z) + iz); for y >= +0 evaluate at -z where the sum does not cancel
  auto raw = [](const Complex& w) { return mul_neg_i(log(sqrt_1mz2(w) + mul_i(w))); };
  return branch_sign(z.y) > 0 ? -raw(-z) : raw(z);
}

inline Complex acos_log(const Complex& z) {
  // -i ln(z + iY(z))
  auto raw = [](const Complex& w) { return mul_neg_i(log(w + mul_i(sqrt_1mz2(w)))); };
  return branch_sign(z.y) < 0 ? Complex{pi, 0.0} - raw(-z) : raw(z);
}

inline Complex atan_log(const Complex& z) {
  // (i/2)(ln(1 - iz) - ln(1 + iz))
  return 0.5 * mul_i(log1p(mul_neg_i(z)) - log1p(mul_i(z)));
}

inline Complex asinh_log(const Complex& z) {
  // ln(z + Z(z)); for x < 0 evaluate at -z
  auto raw = [](const Complex& w) { return log(w + sqrt_1pz2(w)); };
  return branch_sign(z.x) < 0 ? -raw(-z) : raw(z);
}

inline Complex acosh_log(const Complex& z) {
  // ln(z + sqrt(z - 1) sqrt(z + 1))
  return log(z + sqrt_zm1(z) * sqrt_zp1(z));
}

inline Complex atanh_log(const Complex& z) {
  // (ln(1 + z) - ln(1 - z))/2
  return 0.5 * (log1p(z) - log1p(-z));
}

// arctan(1/z) and arctanh(1/z) as logarithms of (z -+ i)/z and (z +- 1)/z,
// which avoids rounding 1/z before it is added to 1. On the axes the zero
// signs of 1/z pick the cut side, so those keep the composed form.
inline Complex acot_log(const Complex& z) {
  if (z.x == 0 || z.y == 0) return atan_log(reciprocal(z));
  const Complex i{0.0, 1.0};
  return 0.5 * mul_i(log((z - i) / z) - log((z + i) / z));
}

inline Complex acoth_log(const Complex& z) {
  if (z.x == 0 || z.y == 0) return atanh_log(reciprocal(z));
  const Complex one{1.0, 0.0};
  return 0.5 * (log((z + one) / z) - log((z - one) / z));
}

}  // namespace detail

/// f(z) through its principal-logarithm closed form. The reciprocal
/// functions are composed as f(1/z); the square-root kernels as
/// exp(ln(radicand)/2).
inline Complex log_form(FunctionId f, const Complex& z) {
  using namespace detail;
  require_finite(z, "log_form");
  const auto kind = classify(f, z);
  if (kind == PointKind::pole) throw error(errc::branch_point, "log_form at a branch point");
  switch (f) {
    case FunctionId::X1: return sqrt_via_log({z.x - 1.0, z.y});
    case FunctionId::X2: return sqrt_via_log({z.x + 1.0, z.y});
    case FunctionId::X: {
      const Complex a{z.x - 1.0, z.y}, b{z.x + 1.0, z.y};
      if ((a.x == 0 && a.y == 0) || (b.x == 0 && b.y == 0)) return {0.0, 0.0};
      return exp(0.5 * (log(a) + log(b)));
    }
    case FunctionId::Y:
      return sqrt_via_log({std::fma(z.y, z.y, (1.0 - z.x) * (1.0 + z.x)), -2.0 * z.x * z.y});
    case FunctionId::Z:
      return sqrt_via_log({std::fma(z.x, z.x, (1.0 - z.y) * (1.0 + z.y)), 2.0 * z.x * z.y});
    case FunctionId::arcsin: return asin_log(z);
    case FunctionId::arccos: return acos_log(z);
    case FunctionId::arccsc: return asin_log(reciprocal(z));
    case FunctionId::arcsec: return acos_log(reciprocal(z));
    case FunctionId::arctan: return atan_log(z);
    case FunctionId::arccot: return acot_log(z);
    case FunctionId::arcsinh: return asinh_log(z);
    case FunctionId::arccosh: return acosh_log(z);
    case FunctionId::arccsch: return asinh_log(reciprocal(z));
    case FunctionId::arcsech: return acosh_log(reciprocal(z));
    case FunctionId::arctanh: return atanh_log(z);
    case FunctionId::arccoth: return acoth_log(z);
  }
  throw error(errc::precondition, "log_form: unknown function");
}

// ---------------------------------------------------------------------------
// Differential comparison

enum class RecordStatus { pass, fail, excluded_point, path_error };

constexpr std::string_view to_string(RecordStatus s) noexcept {
  switch (s) {
    case RecordStatus::pass: return "pass";
    case RecordStatus::fail: return "fail";
    case RecordStatus::excluded_point: return "excluded-point";
    case RecordStatus::path_error: return "path-error";
  }
  return "fail";
}

struct ConformanceRecord {
  FunctionId function{};
  Complex z;
  std::optional<Complex> library;
  std::optional<Complex> log_value;
  std::optional<Complex> integral;
  std::optional<double> deviation;
  RecordStatus status = RecordStatus::fail;
  std::string note;
};

/// Evaluate f at z by the library, the log form and (where defined) the
/// integral, and record the largest pairwise deviation. Errors are folded
/// into the record, never thrown.
inline ConformanceRecord compare(FunctionId f, const Complex& z, double tol) {
  ConformanceRecord rec;
  rec.function = f;
  rec.z = z;
  try {
    rec.library = evaluate(f, z);
  } catch (const error& e) {
    rec.status = e.kind() == errc::branch_point ? RecordStatus::excluded_point : RecordStatus::fail;
    rec.note = e.what();
    return rec;
  }
  try {
    rec.log_value = log_form(f, z);
  } catch (const error& e) {
    rec.status = e.kind() == errc::branch_point ? RecordStatus::excluded_point : RecordStatus::fail;
    rec.note = std::string("log_form: ") + e.what();
    return rec;
  }
  if (integral_defined(f)) {
    try {
      rec.integral = integral_value(f, z, tol).value;
    } catch (const error& e) {
      rec.status = RecordStatus::path_error;
      rec.note = std::string("integral: ") + e.what();
    }
  }
  double dev = abs(*rec.library - *rec.log_value);
  if (rec.integral) {
    dev = std::fmax(dev, abs(*rec.library - *rec.integral));
    dev = std::fmax(dev, abs(*rec.log_value - *rec.integral));
  }
  rec.deviation = dev;
  if (rec.status == RecordStatus::path_error) return rec;
  rec.status = dev <= tol * (1.0 + abs(*rec.library)) ? RecordStatus::pass : RecordStatus::fail;
  return rec;
}

}  // namespace cutplane
