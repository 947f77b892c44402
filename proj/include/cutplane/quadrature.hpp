#pragma once

// Globally adaptive 7-15 point Gauss-Kronrod quadrature of complex-valued
// integrands over a real parameter interval. Error control follows QUADPACK
// qk15/qag: the raw |K15 - G7| difference is reshaped by the integrand's
// variation and floored at 50 eps times the absolute integral, so the
// estimate stays an upper bound when the rule is already exact to rounding.

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "cutplane/complex.hpp"

namespace cutplane {

struct QuadResult {
  Complex value;
  double err_estimate = 0;
  int segments = 0;
};

namespace detail {

// Kronrod abscissae on [0, 1]; odd indices 1, 3, 5 are the Gauss points.
inline constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
inline constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
inline constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
  double a, b;
  Complex value;
  double err;
  bool operator<(const Panel& o) const noexcept { return err < o.err; }
};

template <class F>
Panel gauss_kronrod_15(F& f, double a, double b) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double uflow = std::numeric_limits<double>::min();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<Complex, 15> fv;
  fv[7] = f(center);
  for (int j = 0; j < 7; ++j) {
    fv[j] = f(center - half * xgk[j]);
    fv[14 - j] = f(center + half * xgk[j]);
  }
  Complex resk = wgk[7] * fv[7];
  Complex resg = wg[3] * fv[7];
  double resabs = wgk[7] * abs(fv[7]);
  for (int j = 0; j < 7; ++j) {
    const Complex pair = fv[j] + fv[14 - j];
    resk = resk + wgk[j] * pair;
    resabs += wgk[j] * (abs(fv[j]) + abs(fv[14 - j]));
    if (j % 2 == 1) resg = resg + wg[j / 2] * pair;
  }
  const Complex reskh = 0.5 * resk;
  double resasc = wgk[7] * abs(fv[7] - reskh);
  for (int j = 0; j < 7; ++j) resasc += wgk[j] * (abs(fv[j] - reskh) + abs(fv[14 - j] - reskh));

  const double ah = std::fabs(half);
  resabs *= ah;
  resasc *= ah;
  double err = abs((resk - resg) * half);
  if (resasc != 0 && err != 0) err = resasc * std::fmin(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > uflow / (50 * eps)) err = std::fmax(50 * eps * resabs, err);
  return {a, b, resk * half, err};
}

}  // namespace detail

/// Integrate f over [a, b] until the summed error estimate is at most tol.
/// Throws errc::convergence when max_segments panels do not suffice.
template <class F>
QuadResult integrate(F&& f, double a, double b, double tol, int max_segments = 2000) {
  if (a == b) return {Complex{0.0, 0.0}, 0.0, 0};
  std::priority_queue<detail::Panel> heap;
  auto first = detail::gauss_kronrod_15(f, a, b);
  Complex total = first.value;
  double err = first.err;
  heap.push(first);
  int segments = 1;
  while (err > tol) {
    if (segments >= max_segments) throw error(errc::convergence, "quadrature subdivision limit reached");
    const auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid == worst.a || mid == worst.b)
      throw error(errc::convergence, "quadrature interval cannot be subdivided further");
    auto left = detail::gauss_kronrod_15(f, worst.a, mid);
    auto right = detail::gauss_kronrod_15(f, mid, worst.b);
    total = total - worst.value + left.value + right.value;
    err += left.err + right.err - worst.err;
    heap.push(left);
    heap.push(right);
    ++segments;
    if (err <= tol) {
      // re-sum to purge accumulated cancellation in the running totals
      double fresh = 0;
      Complex sum{0.0, 0.0};
      auto copy = heap;
      while (!copy.empty()) {
        fresh += copy.top().err;
        sum = sum + copy.top().value;
        copy.pop();
      }
      err = fresh;
      total = sum;
    }
  }
  return {total, err, segments};
}

}  // namespace cutplane
