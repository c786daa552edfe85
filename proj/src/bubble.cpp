#include "rzs/bubble.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include <fmt/format.h>

#include "rzs/error.hpp"
#include "rzs/quadrature.hpp"

namespace rzs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSmallMomentum = 1e-6;  // p^2/m^2 threshold for the series branch
constexpr int kAngularPoints = 1024;

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw PreconditionError(fmt::format("{} must be positive and finite (got {})", what, v));
  }
}

const std::array<double, kAngularPoints / 2 + 1>& cos_table() {
  static const auto table = [] {
    std::array<double, kAngularPoints / 2 + 1> c{};
    for (int j = 0; j <= kAngularPoints / 2; ++j) c[j] = std::cos(2.0 * kPi * j / kAngularPoints);
    return c;
  }();
  return table;
}

// int_0^{2pi} dphi / (a - b cos phi) by the periodic trapezoid rule, folded
// onto [0, pi] using the reflection symmetry.
double angular_integral(double a, double b) {
  const auto& c = cos_table();
  double sum = 1.0 / (a - b * c.front()) + 1.0 / (a - b * c.back());
  for (int j = 1; j < kAngularPoints / 2; ++j) sum += 2.0 / (a - b * c[j]);
  return 2.0 * kPi / kAngularPoints * sum;
}

void validate(const GapEquationSpec& spec) {
  require_positive(spec.coupling, "coupling");
  require_positive(spec.cutoff, "cutoff");
  if (spec.n_components < 2) throw PreconditionError("n_components must be at least 2");
}

double gap_exponent(const GapEquationSpec& spec) {
  return 4.0 * kPi / (spec.n_components * spec.coupling * spec.coupling);
}

// ln(1 + e^{-u}) without overflow.
double softplus_neg(double u) {
  return u < 0.0 ? -u + std::log1p(std::exp(u)) : std::log1p(std::exp(-u));
}

}  // namespace

double f_kinematic(double x) { return std::sqrt(1.0 + 4.0 * x * x); }

double feynman_integral(const BubbleSpec& spec) {
  require_positive(spec.p, "p");
  require_positive(spec.m, "m");
  if (spec.alpha < 1.0 || spec.beta < 1.0) {
    throw PreconditionError("feynman_integral: alpha and beta must be >= 1");
  }
  const double exponent = spec.dim / 2.0 - spec.alpha - spec.beta;
  if (!(exponent < 0.0)) {
    throw PreconditionError("feynman_integral: alpha + beta - d/2 must be positive");
  }

  const double p2 = spec.p * spec.p;
  const double ratio = spec.m * spec.m / p2;
  auto integrand = [&](double x) {
    return std::pow(x, spec.alpha - 1.0) * std::pow(1.0 - x, spec.beta - 1.0) *
           std::pow(x * (1.0 - x) + ratio, exponent);
  };
  const auto r = quad::integrate(integrand, 0.0, 1.0, {.rel_tol = 1e-9, .abs_tol = 0.0, .max_intervals = 4000});

  const double prefactor = std::pow(4.0 * kPi, -spec.dim / 2.0) * std::pow(p2, exponent) *
                           std::tgamma(-exponent) / (std::tgamma(spec.alpha) * std::tgamma(spec.beta));
  return prefactor * r.value;
}

double pi_closed(double p, double m) {
  require_positive(m, "m");
  if (!std::isfinite(p)) throw PreconditionError("pi_closed: p must be finite");
  const double r = (p * p) / (m * m);
  if (r < kSmallMomentum) {
    return (1.0 - r / 6.0 + r * r / 30.0) / (4.0 * kPi * m * m);
  }
  const double x = m / std::abs(p);
  const double f = f_kinematic(x);
  // f - 1 = 4x^2 / (f + 1) avoids cancellation as p/m grows.
  const double f_minus_one = 4.0 * x * x / (f + 1.0);
  return std::log1p(2.0 / f_minus_one) / (2.0 * kPi * f * p * p);
}

double pi_at_zero(double m) {
  require_positive(m, "m");
  return 1.0 / (4.0 * kPi * m * m);
}

double pi_momentum_quadrature(double p, double m) {
  require_positive(m, "m");
  p = std::abs(p);
  const double m2 = m * m;
  const double p2 = p * p;
  auto radial = [&](double r) {
    const double r2 = r * r;
    return r / (4.0 * kPi * kPi) * angular_integral(r2 + p2 + m2, 2.0 * r * p) / (r2 + m2);
  };

  // Geometric breakpoints resolve the peak near r ~ sqrt(p^2 + m^2) and the
  // narrow structure of width ~ m^2/p around r = p when p >> m.
  const double scale = p > 0.0 ? std::min(p, m) : m;
  std::vector<double> breaks = {0.0};
  for (double b = scale / 64.0; b < 4.0 * std::max(p, m); b *= 2.0) breaks.push_back(b);
  if (p > 0.0) breaks.push_back(p);
  breaks.push_back(std::sqrt(p2 + m2));

  double peak = 0.0;
  for (double b : breaks) peak = std::max(peak, radial(b));
  double outer = 4.0 * std::max(p, m);
  breaks.push_back(outer);
  while (radial(outer) > 1e-16 * peak) {
    outer *= 2.0;
    breaks.push_back(outer);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  return quad::integrate_segments(radial, breaks, {.rel_tol = 1e-8, .abs_tol = 0.0, .max_intervals = 4000})
      .value;
}

CorrelatorSample correlator_sample(double t, double m2) {
  require_positive(t, "t");
  require_positive(m2, "m2");
  CorrelatorSample s;
  s.t = t;
  s.m2 = m2;
  s.pi_value = pi_closed(std::sqrt(t), std::sqrt(m2));
  s.correlator = 1.0 / s.pi_value;
  if (t > m2) s.asymptote = 2.0 * kPi * t / std::log(t / m2);
  return s;
}

double gap_mass_closed_form(const GapEquationSpec& spec) {
  validate(spec);
  return spec.cutoff * spec.cutoff / std::expm1(gap_exponent(spec));
}

double gap_mass(const GapEquationSpec& spec) {
  validate(spec);
  const double c = gap_exponent(spec);
  // In u = ln(m^2 / Lambda^2) the equation reads ln(1 + e^{-u}) = c, with the
  // left side decreasing; m^2 <= Lambda^2 means u <= 0, i.e. c >= ln 2.
  constexpr double kEdgeSlack = 1e-10;
  if (c < std::numbers::ln2 * (1.0 - kEdgeSlack)) {
    throw NoSolution(fmt::format("gap equation: m^2 = {:.6g} exceeds cutoff^2 = {:.6g}",
                                 gap_mass_closed_form(spec), spec.cutoff * spec.cutoff));
  }
  double lo = -(c + 1.0);
  double hi = kEdgeSlack;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (softplus_neg(mid) > c) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double m2 = spec.cutoff * spec.cutoff * std::exp(0.5 * (lo + hi));
  if (!(m2 > 0.0) || !std::isnormal(m2)) {
    throw NoSolution("gap equation: m^2 underflows double precision");
  }
  return m2;
}

double tadpole_quadrature(double m2, double cutoff) {
  require_positive(m2, "m2");
  require_positive(cutoff, "cutoff");
  const double m = std::sqrt(m2);
  auto integrand = [&](double k) { return k / (2.0 * kPi * (k * k + m2)); };
  std::vector<double> breaks = {0.0};
  for (double b = m / 16.0; b < cutoff; b *= 2.0) breaks.push_back(b);
  breaks.push_back(cutoff);
  return quad::integrate_segments(integrand, breaks, {.rel_tol = 1e-11, .abs_tol = 0.0, .max_intervals = 4000})
      .value;
}

double gap_residual(const GapEquationSpec& spec, double m2) {
  validate(spec);
  const double lhs = 1.0 / (spec.coupling * spec.coupling);
  const double rhs = spec.n_components * tadpole_quadrature(m2, spec.cutoff);
  return std::abs(lhs - rhs) / lhs;
}

}  // namespace rzs
