#pragma once

// Axis traces, grid export and the seeded conformance run behind the
// command-line tool. Output is assembled in a fixed order, so equal inputs
// give byte-identical text.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "cutplane/literal.hpp"
#include "cutplane/oracle.hpp"

namespace cutplane {

// ---------------------------------------------------------------------------
// Traces

enum class TraceAxis { re_upper, re_lower, im_left, im_right };

inline std::optional<TraceAxis> parse_trace_axis(std::string_view s) noexcept {
  if (s == "re-upper" || s == "re") return TraceAxis::re_upper;
  if (s == "re-lower") return TraceAxis::re_lower;
  if (s == "im-left") return TraceAxis::im_left;
  if (s == "im-right" || s == "im") return TraceAxis::im_right;
  return std::nullopt;
}

/// The point at parameter t on the chosen side of an axis.
inline Complex trace_point(TraceAxis axis, double t) noexcept {
  switch (axis) {
    case TraceAxis::re_upper: return {t, 0.0};
    case TraceAxis::re_lower: return {t, -0.0};
    case TraceAxis::im_left: return {-0.0, t};
    case TraceAxis::im_right: return {0.0, t};
  }
  return {t, 0.0};
}

/// n points from a to b inclusive; the last one is b exactly.
inline std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out;
  if (n <= 0) return out;
  if (n == 1) return {a};
  out.reserve(static_cast<std::size_t>(n));
  const double step = (b - a) / (n - 1);
  for (int i = 0; i < n; ++i) out.push_back(i == n - 1 ? b : a + i * step);
  return out;
}

struct TraceRow {
  double t;
  std::optional<Complex> value;
  std::string error;
};

inline std::vector<TraceRow> trace(FunctionId f, TraceAxis axis, double t0, double t1, int n) {
  if (n < 1) throw error(errc::precondition, "trace needs at least one sample");
  std::vector<TraceRow> rows;
  for (double t : linspace(t0, t1, n)) {
    TraceRow row{t, std::nullopt, {}};
    try {
      row.value = evaluate(f, trace_point(axis, t));
    } catch (const error& e) {
      row.error = std::string(to_string(e.kind()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline void write_trace_csv(std::ostream& os, const std::vector<TraceRow>& rows) {
  os << "t,re,im\n";
  for (const auto& r : rows) {
    os << format_double(r.t) << ',';
    if (r.value)
      os << format_double(r.value->x) << ',' << format_double(r.value->y) << '\n';
    else
      os << "nan,nan\n";
  }
}

// ---------------------------------------------------------------------------
// Grids

struct GridSpec {
  FunctionId function = FunctionId::X;
  double x0 = -2, x1 = 2, y0 = -2, y1 = 2;
  int nx = 65, ny = 65;

  void validate() const {
    if (!(x0 < x1) || !(y0 < y1)) throw error(errc::precondition, "grid range must satisfy x0 < x1 and y0 < y1");
    if (nx < 2 || ny < 2) throw error(errc::precondition, "grid needs at least 2 samples per axis");
  }
};

struct GridCell {
  Complex z;
  std::optional<Complex> value;
  PointKind kind;
};

/// Cells in row-major order: y outer, x inner.
inline std::vector<GridCell> grid(const GridSpec& spec) {
  spec.validate();
  const auto xs = linspace(spec.x0, spec.x1, spec.nx);
  const auto ys = linspace(spec.y0, spec.y1, spec.ny);
  std::vector<GridCell> cells;
  cells.reserve(xs.size() * ys.size());
  for (double y : ys) {
    for (double x : xs) {
      const Complex z{x, y};
      GridCell c{z, std::nullopt, classify(spec.function, z)};
      try {
        c.value = evaluate(spec.function, z);
      } catch (const error&) {
      }
      cells.push_back(c);
    }
  }
  return cells;
}

inline void write_grid_csv(std::ostream& os, const std::vector<GridCell>& cells) {
  os << "x,y,re,im,status\n";
  for (const auto& c : cells) {
    os << format_double(c.z.x) << ',' << format_double(c.z.y) << ',';
    if (c.value)
      os << format_double(c.value->x) << ',' << format_double(c.value->y);
    else
      os << "nan,nan";
    os << ',' << to_string(c.kind) << '\n';
  }
}

// ---------------------------------------------------------------------------
// Conformance run

struct CheckOptions {
  double tol = 1e-9;
  int samples_per_fn = 1000;
  std::uint64_t seed = 42;
};

struct Sample {
  Complex z;
  const char* stratum;
};

namespace detail {

inline constexpr double sample_box = 4.0;
inline constexpr double near_cut_offset = 1e-6;

inline double finite_lo(const CutSegment& c) { return std::fmax(c.lo, -sample_box); }
inline double finite_hi(const CutSegment& c) { return std::fmin(c.hi, sample_box); }

inline Complex on_axis(Axis axis, double along, double across) noexcept {
  return axis == Axis::real ? Complex{along, across} : Complex{across, along};
}

}  // namespace detail

/// Seeded stratified points for f. Shares count
///   interior 35%, wide 10%, near-cut 20%, on-cut 10%, axis 10%, near branch point 15%,
/// followed by the branch points themselves.
inline std::vector<Sample> stratified_samples(FunctionId f, int n, std::uint64_t seed) {
  using namespace detail;
  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(f) + 1)));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto uniform = [&](double a, double b) { return a + (b - a) * unit(rng); };
  auto coin = [&] { return unit(rng) < 0.5; };
  const auto g = geometry(f);

  const int n_interior = n * 35 / 100;
  const int n_wide = n * 10 / 100;
  const int n_near = n * 20 / 100;
  const int n_on = n * 10 / 100;
  const int n_axis = n * 10 / 100;
  const int n_bp = n - n_interior - n_wide - n_near - n_on - n_axis;

  std::vector<Sample> out;
  out.reserve(static_cast<std::size_t>(n) + g.branch_points.size());
  for (int i = 0; i < n_interior; ++i)
    out.push_back({{uniform(-sample_box, sample_box), uniform(-sample_box, sample_box)}, "interior"});
  for (int i = 0; i < n_wide; ++i) {
    const double r = std::pow(10.0, uniform(-6.0, 6.0));
    const double th = uniform(-pi, pi);
    out.push_back({{r * std::cos(th), r * std::sin(th)}, "wide"});
  }
  for (int i = 0; i < n_near; ++i) {
    const auto& c = g.cuts[static_cast<std::size_t>(i) % g.cuts.size()];
    const double along = uniform(finite_lo(c), finite_hi(c));
    const double across = (coin() ? 1.0 : -1.0) * near_cut_offset * uniform(0.01, 1.0);
    out.push_back({on_axis(c.axis, along, across), "near-cut"});
  }
  for (int i = 0; i < n_on; ++i) {
    const auto& c = g.cuts[static_cast<std::size_t>(i) % g.cuts.size()];
    const double along = uniform(finite_lo(c), finite_hi(c));
    const double across = (i / static_cast<int>(g.cuts.size())) % 2 == 0 ? 0.0 : -0.0;
    out.push_back({on_axis(c.axis, along, across), "on-cut"});
  }
  for (int i = 0; i < n_axis; ++i) {
    const double t = uniform(-sample_box, sample_box);
    const double zero = (i / 2) % 2 == 0 ? 0.0 : -0.0;
    out.push_back({i % 2 == 0 ? Complex{t, zero} : Complex{zero, t}, "axis"});
  }
  for (int i = 0; i < n_bp; ++i) {
    const auto& p = g.branch_points[static_cast<std::size_t>(i) % g.branch_points.size()];
    const double r = std::pow(10.0, uniform(-6.0, -1.0));
    const double th = uniform(-pi, pi);
    out.push_back({{p.x + r * std::cos(th), p.y + r * std::sin(th)}, "near-branch-point"});
  }
  for (const auto& p : g.branch_points) out.push_back({p, "branch-point"});
  return out;
}

struct ReflectionCheck {
  std::string formula;
  std::string published;
  std::string convention;
  int samples = 0;
  double max_deviation = 0;       ///< corrected formula, in radians
  double published_deviation = 0; ///< smallest deviation of the published sign
  bool pass = false;
};

/// Re-verify arccosh(-z) = arccosh(z) - i sign(y) pi and
/// arcsech(-z) = arcsech(z) + i sign(y) pi against the library, and measure
/// how far the opposite sign is off.
inline std::vector<ReflectionCheck> reflection_errata(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0xD1B54A32D192ED03ull);
  std::uniform_real_distribution<double> u(-detail::sample_box, detail::sample_box);
  ReflectionCheck cosh{"arccosh(-z) = arccosh(z) - i sign(y) pi", "arccosh(-z) = arccosh(z) + i sign(y) pi",
                       "paper convention: −iπ for y>0", 0, 0, HUGE_VAL, false};
  ReflectionCheck sech{"arcsech(-z) = arcsech(z) + i sign(y) pi", "arcsech(-z) = arcsech(z) - i sign(y) pi",
                       "paper convention: +iπ for y>0", 0, 0, HUGE_VAL, false};
  for (int i = 0; i < n; ++i) {
    const Complex z{u(rng), u(rng)};
    if (z.y == 0) continue;
    const double s = sign(z.y);
    const Complex lhs_c = arccosh(-z), base_c = arccosh(z);
    cosh.max_deviation = std::fmax(cosh.max_deviation, abs(lhs_c - (base_c - Complex{0.0, s * pi})));
    cosh.published_deviation = std::fmin(cosh.published_deviation, abs(lhs_c - (base_c + Complex{0.0, s * pi})));
    const Complex lhs_s = arcsech(-z), base_s = arcsech(z);
    sech.max_deviation = std::fmax(sech.max_deviation, abs(lhs_s - (base_s + Complex{0.0, s * pi})));
    sech.published_deviation = std::fmin(sech.published_deviation, abs(lhs_s - (base_s - Complex{0.0, s * pi})));
    ++cosh.samples;
    ++sech.samples;
  }
  // 2 ulp of pi
  const double bound = 2.0 * (std::nextafter(pi, 4.0) - pi);
  for (auto* r : {&cosh, &sech}) r->pass = r->samples > 0 && r->max_deviation <= bound;
  return {cosh, sech};
}

struct FunctionTally {
  int pass = 0, fail = 0, excluded = 0, path_error = 0;
};

struct CheckReport {
  CheckOptions options;
  std::vector<std::pair<ConformanceRecord, const char*>> records;
  std::vector<ReflectionCheck> errata;
  std::map<FunctionId, FunctionTally> tally;

  int failures() const noexcept {
    int n = 0;
    for (const auto& [f, t] : tally) n += t.fail + t.path_error;
    for (const auto& e : errata) n += e.pass ? 0 : 1;
    return n;
  }
};

inline CheckReport run_check(const CheckOptions& opt) {
  if (!(opt.tol > 0)) throw error(errc::precondition, "check tolerance must be positive");
  if (opt.samples_per_fn < 1) throw error(errc::precondition, "check needs at least one sample per function");
  CheckReport rep;
  rep.options = opt;
  for (auto f : all_functions) {
    auto& t = rep.tally[f];
    for (const auto& s : stratified_samples(f, opt.samples_per_fn, opt.seed)) {
      auto rec = compare(f, s.z, opt.tol);
      switch (rec.status) {
        case RecordStatus::pass: ++t.pass; break;
        case RecordStatus::fail: ++t.fail; break;
        case RecordStatus::excluded_point: ++t.excluded; break;
        case RecordStatus::path_error: ++t.path_error; break;
      }
      rep.records.emplace_back(std::move(rec), s.stratum);
    }
  }
  rep.errata = reflection_errata(opt.samples_per_fn, opt.seed);
  return rep;
}

namespace detail {

inline nlohmann::json complex_json(const std::optional<Complex>& z) {
  if (!z) return nullptr;
  return format_complex(*z);
}

}  // namespace detail

inline nlohmann::ordered_json record_json(const ConformanceRecord& r, const char* stratum) {
  nlohmann::ordered_json j;
  j["type"] = "record";
  j["fn"] = std::string(name(r.function));
  j["stratum"] = stratum;
  j["z"] = format_complex(r.z);
  j["library"] = detail::complex_json(r.library);
  j["log_form"] = detail::complex_json(r.log_value);
  j["integral"] = detail::complex_json(r.integral);
  if (r.deviation)
    j["deviation"] = *r.deviation;
  else
    j["deviation"] = nullptr;
  j["status"] = std::string(to_string(r.status));
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

/// JSON lines: a header, one record per point, the reflection errata
/// section, then a summary.
inline void write_report(std::ostream& os, const CheckReport& rep) {
  using nlohmann::ordered_json;
  ordered_json header;
  header["type"] = "header";
  header["tol"] = rep.options.tol;
  header["samples_per_fn"] = rep.options.samples_per_fn;
  header["seed"] = rep.options.seed;
  header["rng"] = "mt19937_64, stream per function: seed xor 0x9E3779B97F4A7C15*(index+1)";
  header["strata"] = {
      {"interior", "35%, uniform on [-4,4]^2"},
      {"wide", "10%, |z| log-uniform on [1e-6, 1e6], uniform argument"},
      {"near-cut", "20%, within 1e-6 of a cut, both sides, cut clipped to [-4,4]"},
      {"on-cut", "10%, exactly on a cut with +0 and -0"},
      {"axis", "10%, real and imaginary axes with +0 and -0"},
      {"near-branch-point", "remainder, distance log-uniform on [1e-6, 1e-1]"},
      {"branch-point", "each branch point exactly"},
  };
  header["functions"] = all_functions.size();
  os << header.dump() << '\n';
  for (const auto& [r, stratum] : rep.records) os << record_json(r, stratum).dump() << '\n';
  for (const auto& e : rep.errata) {
    ordered_json j;
    j["type"] = "errata";
    j["formula"] = e.formula;
    j["published"] = e.published;
    j["samples"] = e.samples;
    j["max_deviation"] = e.max_deviation;
    j["published_min_deviation"] = e.published_deviation;
    j["status"] = e.pass ? "pass" : "fail";
    j["summary"] = e.convention;
    os << j.dump() << '\n';
  }
  ordered_json summary;
  summary["type"] = "summary";
  int total = 0;
  for (auto f : all_functions) {
    const auto it = rep.tally.find(f);
    const FunctionTally t = it == rep.tally.end() ? FunctionTally{} : it->second;
    summary["functions"][std::string(name(f))] = {
        {"pass", t.pass}, {"fail", t.fail}, {"excluded-point", t.excluded}, {"path-error", t.path_error}};
    total += t.pass + t.fail + t.excluded + t.path_error;
  }
  summary["records"] = total;
  for (const auto& e : rep.errata) summary["reflections"].push_back(e.formula + " (" + e.convention + ")");
  summary["failures"] = rep.failures();
  summary["result"] = rep.failures() == 0 ? "pass" : "fail";
  os << summary.dump() << '\n';
}

}  // namespace cutplane
