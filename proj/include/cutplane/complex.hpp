#pragma once

// Signed-zero-aware complex values and the handful of primitive operations
// the branch formulas are assembled from. The two zeros select the side of a
// cut, so nothing here is allowed to launder -0 into +0.

#include <cmath>
#include <numbers>

#include "cutplane/error.hpp"

namespace cutplane {

struct Complex {
  double x = 0.0;  // real part
  double y = 0.0;  // imaginary part

  constexpr Complex() = default;
  constexpr Complex(double re, double im = 0.0) : x(re), y(im) {}

  constexpr double real() const noexcept { return x; }
  constexpr double imag() const noexcept { return y; }

  bool is_finite() const noexcept { return std::isfinite(x) && std::isfinite(y); }

  /// Bitwise identity, so +0 and -0 compare unequal.
  bool identical(const Complex& o) const noexcept {
    return std::signbit(x) == std::signbit(o.x) && std::signbit(y) == std::signbit(o.y) &&
           (x == o.x || (std::isnan(x) && std::isnan(o.x))) &&
           (y == o.y || (std::isnan(y) && std::isnan(o.y)));
  }

  friend constexpr bool operator==(const Complex& a, const Complex& b) noexcept {
    return a.x == b.x && a.y == b.y;
  }
};

inline constexpr double pi = std::numbers::pi;
inline constexpr double half_pi = std::numbers::pi / 2;
inline constexpr double quarter_pi = std::numbers::pi / 4;

constexpr Complex operator-(const Complex& z) noexcept { return {-z.x, -z.y}; }
constexpr Complex operator+(const Complex& a, const Complex& b) noexcept { return {a.x + b.x, a.y + b.y}; }
constexpr Complex operator-(const Complex& a, const Complex& b) noexcept { return {a.x - b.x, a.y - b.y}; }
constexpr Complex operator*(double s, const Complex& z) noexcept { return {s * z.x, s * z.y}; }
constexpr Complex operator*(const Complex& z, double s) noexcept { return {s * z.x, s * z.y}; }

inline Complex operator*(const Complex& a, const Complex& b) noexcept {
  return {std::fma(a.x, b.x, -a.y * b.y), std::fma(a.x, b.y, a.y * b.x)};
}

constexpr Complex conj(const Complex& z) noexcept { return {z.x, -z.y}; }

/// i*z, exact and zero-sign preserving: i(x + iy) = -y + ix.
constexpr Complex mul_i(const Complex& z) noexcept { return {-z.y, z.x}; }
/// -i*z = y - ix.
constexpr Complex mul_neg_i(const Complex& z) noexcept { return {z.y, -z.x}; }

inline double abs(const Complex& z) noexcept { return std::hypot(z.x, z.y); }

/// Mathematical sign: both zeros map to 0.
constexpr int sign(double v) noexcept { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

/// Two-valued sign used to pick a cut side: +0 counts as positive, -0 as negative.
inline int branch_sign(double v) noexcept { return std::signbit(v) ? -1 : 1; }

namespace detail {

inline void require_finite(const Complex& z, const char* who) {
  if (!z.is_finite()) throw error(errc::domain, std::string(who) + ": non-finite argument");
}

inline Complex checked(const Complex& w, const char* who) {
  if (!w.is_finite()) throw error(errc::domain, std::string(who) + ": result out of range");
  return w;
}

}  // namespace detail

/// 1/z by Smith's scaling. The image of x + i(+0) is x - i0 for either sign
/// of x, which is what carries a cut side through arccsc, arcsec, arccsch,
/// arcsech and the reciprocal-based oracles.
inline Complex reciprocal(const Complex& z) {
  detail::require_finite(z, "reciprocal");
  if (z.x == 0 && z.y == 0) throw error(errc::branch_point, "reciprocal of zero");
  if (std::fabs(z.x) >= std::fabs(z.y)) {
    const double r = z.y / z.x;
    const double d = z.x + z.y * r;
    return detail::checked({1.0 / d, -r / d}, "reciprocal");
  }
  const double r = z.x / z.y;
  const double d = z.y + z.x * r;
  return detail::checked({r / d, -1.0 / d}, "reciprocal");
}

inline Complex operator/(const Complex& a, const Complex& b) {
  if (std::fabs(b.x) >= std::fabs(b.y)) {
    const double r = b.y / b.x;
    const double d = b.x + b.y * r;
    return {(a.x + a.y * r) / d, (a.y - a.x * r) / d};
  }
  const double r = b.x / b.y;
  const double d = b.y + b.x * r;
  return {(a.x * r + a.y) / d, (a.y * r - a.x) / d};
}

inline Complex operator/(const Complex& a, double s) noexcept { return {a.x / s, a.y / s}; }

/// ln|w| with the |w| ~ 1 region routed through log1p.
inline double log_abs(const Complex& w) noexcept {
  const double ax = std::fabs(w.x), ay = std::fabs(w.y);
  const double big = std::fmax(ax, ay), small = std::fmin(ax, ay);
  if (big > 0.5 && big < 2.0) {
    // |w|^2 - 1 = (big - 1)(big + 1) + small^2, exact subtraction near 1
    return 0.5 * std::log1p(std::fma(small, small, (big - 1.0) * (big + 1.0)));
  }
  return std::log(std::hypot(ax, ay));
}

/// Principal logarithm: imaginary part in (-pi, pi], with the zero sign of
/// Im w choosing +-pi on the negative real axis.
inline Complex log(const Complex& w) {
  detail::require_finite(w, "log");
  if (w.x == 0 && w.y == 0) throw error(errc::branch_point, "log of zero");
  return {log_abs(w), std::atan2(w.y, w.x)};
}

/// ln(1 + w), accurate for small |w|.
inline Complex log1p(const Complex& w) {
  detail::require_finite(w, "log1p");
  const double u = 1.0 + w.x;
  if (u == 0 && w.y == 0) throw error(errc::branch_point, "log of zero");
  double re;
  if (std::fabs(w.x) < 0.5 && std::fabs(w.y) < 0.5) {
    // |1 + w|^2 - 1 = 2x + x^2 + y^2
    re = 0.5 * std::log1p(std::fma(w.x, w.x, std::fma(w.y, w.y, 2.0 * w.x)));
  } else {
    re = std::log(std::hypot(u, w.y));
  }
  return {re, std::atan2(w.y, u)};
}

}  // namespace cutplane
