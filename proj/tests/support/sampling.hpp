#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <random>

#include "cutplane/cutplane.hpp"

namespace cutplane::testing {

/// Distance in units in the last place; +0 and -0 count as equal.
inline double ulp_distance(double a, double b) {
  if (a == b) return 0;
  if (std::isnan(a) || std::isnan(b)) return std::numeric_limits<double>::infinity();
  auto ordered = [](double v) {
    std::int64_t i;
    std::memcpy(&i, &v, sizeof i);
    return i < 0 ? std::numeric_limits<std::int64_t>::min() - i : i;
  };
  const long double d = static_cast<long double>(ordered(a)) - static_cast<long double>(ordered(b));
  return static_cast<double>(std::fabs(d));
}

inline double ulp_distance(const Complex& a, const Complex& b) {
  return std::fmax(ulp_distance(a.x, b.x), ulp_distance(a.y, b.y));
}

/// One unit in the last place at |v|.
inline double ulp(double v) {
  v = std::fabs(v);
  return std::nextafter(v, HUGE_VAL) - v;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double a, double b) { return a + (b - a) * unit_(rng_); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  bool coin() { return unit_(rng_) < 0.5; }
  double pm() { return coin() ? 1.0 : -1.0; }
  int index(int n) { return static_cast<int>(unit_(rng_) * n) % n; }

  Complex box(double r) { return {uniform(-r, r), uniform(-r, r)}; }

  Complex polar(double lo, double hi) {
    const double r = log_uniform(lo, hi);
    const double th = uniform(-pi, pi);
    return {r * std::cos(th), r * std::sin(th)};
  }

  /// A point on (offset 0, signed zero) or near one cut of f, along-coordinate
  /// clipped to [-extent, extent] and kept inside the open cut.
  Complex at_cut(FunctionId f, double offset, double extent) {
    const auto g = geometry(f);
    const auto& c = g.cuts[static_cast<std::size_t>(index(static_cast<int>(g.cuts.size())))];
    const double lo = std::fmax(c.lo, -extent), hi = std::fmin(c.hi, extent);
    double along = uniform(lo, hi);
    if (along == c.lo || along == c.hi) along = 0.5 * (lo + hi);
    const double across = offset == 0 ? (coin() ? 0.0 : -0.0) : pm() * offset * uniform(0.5, 1.0);
    return c.axis == Axis::real ? Complex{along, across} : Complex{across, along};
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

}  // namespace cutplane::testing
