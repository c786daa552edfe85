#pragma once

// One-loop polarization of the 2D O(N) non-linear sigma model at leading
// order in 1/N, the Feynman-parameter form of the two-propagator integral,
// the correlator <u(-p) u(p)> = 1/Pi(p) and the saddle-point gap equation.
//
// Momenta and masses are in arbitrary but common units; t = p^2.

#include <optional>

namespace rzs {

struct BubbleSpec {
  double alpha = 1.0;
  double beta = 1.0;
  double dim = 2.0;
  double p = 1.0;
  double m = 1.0;
};

struct CorrelatorSample {
  double t = 0.0;
  double pi_value = 0.0;
  double correlator = 0.0;
  // 2 pi t / ln(t / m^2); empty when t <= m^2.
  std::optional<double> asymptote;
  double m2 = 0.0;
};

struct GapEquationSpec {
  double coupling = 1.0;  // g0
  int n_components = 2;   // N
  double cutoff = 1.0;    // Lambda
};

// sqrt(1 + 4 x^2).
double f_kinematic(double x);

// I(alpha, beta, d, p) with the Feynman-parameter integral done by adaptive
// quadrature (relative tolerance 1e-9). Requires alpha, beta >= 1,
// alpha + beta - d/2 > 0, p > 0, m > 0.
double feynman_integral(const BubbleSpec& spec);

// Closed form Pi(p) = ln[(f + 1)/(f - 1)] / (2 pi f p^2), f = f_kinematic(m/p).
// Below p^2/m^2 = 1e-6 the three-term expansion about p = 0 is used.
double pi_closed(double p, double m);

// lim_{p->0} Pi(p) = 1 / (4 pi m^2).
double pi_at_zero(double m);

// Pi(p) straight from the momentum integral over d^2q/(2 pi)^2 in polar
// coordinates: fixed 1024-point periodic trapezoid rule in the angle,
// adaptive radial quadrature (relative tolerance 1e-8) truncated where the
// integrand has fallen below 1e-16 of its peak.
double pi_momentum_quadrature(double p, double m);

CorrelatorSample correlator_sample(double t, double m2);

// Solution m^2 of 1/g0^2 = N/(4 pi) ln((Lambda^2 + m^2)/m^2) by bisection.
// Throws NoSolution when the root lies above Lambda^2.
double gap_mass(const GapEquationSpec& spec);

// Lambda^2 / (exp(4 pi / (N g0^2)) - 1).
double gap_mass_closed_form(const GapEquationSpec& spec);

// G(x, x; m^2) with a sharp cutoff: int_{|k|<Lambda} d^2k/(2 pi)^2 1/(k^2 + m^2),
// evaluated by radial quadrature.
double tadpole_quadrature(double m2, double cutoff);

// |1/g0^2 - N G| / (1/g0^2) with G from tadpole_quadrature.
double gap_residual(const GapEquationSpec& spec, double m2);

}  // namespace rzs
