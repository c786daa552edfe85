#pragma once

// Globally adaptive Gauss-Kronrod (7/15) quadrature.
//
// The interval with the largest error estimate is bisected until the summed
// estimate drops below max(abs_tol, rel_tol * |integral|). The error of a
// panel is taken as |K15 - G7|, which overstates the true K15 error by a
// wide margin for smooth integrands; the returned value is the K15 sum.

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "rzs/error.hpp"

namespace rzs::quad {

struct Result {
  double value = 0.0;
  double abs_error = 0.0;
  int intervals = 0;
};

struct Options {
  double rel_tol = 1e-9;
  double abs_tol = 0.0;
  int max_intervals = 4000;
};

namespace detail {

// Kronrod abscissae (descending, last is the centre) and weights; Gauss
// weights belong to the odd-indexed abscissae and the centre.
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gauss_kronrod_15(const F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double pair = f(centre - dx) + f(centre + dx);
    kronrod += kWgk[i] * pair;
    if (i % 2 == 1) gauss += kWg[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

// Integrates f over [a, b]. Throws ConvergenceFailure if the tolerance is not
// met within opts.max_intervals panels, or if a panel shrinks below the
// floating-point resolution of its endpoints.
template <class F>
Result integrate(const F& f, double a, double b, const Options& opts = {}) {
  std::priority_queue<detail::Panel> heap;
  auto first = detail::gauss_kronrod_15(f, a, b);
  if (!std::isfinite(first.value) || !std::isfinite(first.error)) {
    throw ConvergenceFailure("quadrature: non-finite integrand value");
  }
  double total = first.value;
  double total_err = first.error;
  heap.push(first);
  int intervals = 1;

  auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };

  while (!(total_err <= target())) {
    if (intervals >= opts.max_intervals) {
      throw ConvergenceFailure("quadrature: interval limit reached (error estimate " +
                               std::to_string(total_err) + ")");
    }
    const detail::Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const double scale = std::max(std::abs(worst.a), std::abs(worst.b));
    if (worst.b - worst.a <= 64.0 * std::numeric_limits<double>::epsilon() * scale ||
        mid <= worst.a || mid >= worst.b) {
      throw ConvergenceFailure("quadrature: panel width reached floating-point resolution");
    }
    const auto left = detail::gauss_kronrod_15(f, worst.a, mid);
    const auto right = detail::gauss_kronrod_15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    if (!std::isfinite(total) || !std::isfinite(total_err)) {
      throw ConvergenceFailure("quadrature: non-finite integrand value");
    }
    heap.push(left);
    heap.push(right);
    ++intervals;
  }

  // Re-sum to shed the drift accumulated by the incremental updates.
  double sum = 0.0;
  double err = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return {sum, err, intervals};
}

// Sums adaptive integrals over consecutive breakpoint segments. Each segment
// is held to the relative tolerance on its own, which bounds the total
// relative error when the integrand has one sign.
template <class F>
Result integrate_segments(const F& f, const std::vector<double>& breakpoints,
                          const Options& opts = {}) {
  Result out;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const auto r = integrate(f, breakpoints[i], breakpoints[i + 1], opts);
    out.value += r.value;
    out.abs_error += r.abs_error;
    out.intervals += r.intervals;
  }
  return out;
}

}  // namespace rzs::quad
