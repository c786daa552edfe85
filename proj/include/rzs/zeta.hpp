#pragma once

// Riemann zeta on the critical line, zero location and zero counting.
//
// Z(t) = exp(i theta(t)) zeta(1/2 + i t) is real for real t and changes sign
// exactly at critical-line zeros. Below the crossover height it is evaluated
// from an Euler-Maclaurin sum for zeta; above it from the Riemann-Siegel
// main sum plus correction terms. Everything runs in double precision and is
// limited to heights |t| <= 1e4.

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

namespace rzs {

inline constexpr double kMaxHeight = 1.0e4;
inline constexpr double kDefaultCountCorrection = 7.0 / 8.0;

enum class ZetaMethod { euler_maclaurin, riemann_siegel };

std::string_view to_string(ZetaMethod method);

struct ZetaConfig {
  double crossover = 30.0;
  // Number of Riemann-Siegel correction functions kept (C0 .. C_{n-1}), 1..5.
  int rs_corrections = 5;
  double max_height = kMaxHeight;
};

struct CriticalLineSample {
  double t = 0.0;
  double z_value = 0.0;
  double theta_value = 0.0;
  ZetaMethod method = ZetaMethod::euler_maclaurin;
  double est_abs_error = 0.0;
};

struct ThetaValue {
  double value;
  double error_bound;
};

// Riemann-Siegel theta, arg Gamma(1/4 + i t/2) - (t/2) ln pi, with an error
// bound. Odd in t. Throws PrecisionExceeded for |t| > kMaxHeight.
ThetaValue theta_with_bound(double t);

// theta(t); throws PrecisionExceeded when the error bound exceeds tol.
double theta(double t, double tol = 1e-10);

// zeta(s) by Euler-Maclaurin summation with N ~ |Im s| terms. err receives a
// bound on the truncation remainder plus accumulated rounding.
std::complex<double> zeta_euler_maclaurin(std::complex<double> s, double* err = nullptr);

// Z(t) with method dispatch and an error estimate, never checked against a
// tolerance. Z is even, so negative t evaluates at |t|.
CriticalLineSample z_sample(double t, const ZetaConfig& config = {});

// Z(t) with est_abs_error <= tol or PrecisionExceeded.
CriticalLineSample z_function(double t, double tol, const ZetaConfig& config = {});

struct ZeroEntry {
  int index = 0;
  double gamma = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double refined_tol = 0.0;
};

struct ZeroTable {
  std::vector<ZeroEntry> zeros;
  double t_max = 0.0;
  double stride = 0.0;  // grid stride at which the audit passed

  std::size_t size() const { return zeros.size(); }
  bool empty() const { return zeros.empty(); }
};

struct ScanOptions {
  double initial_stride = 0.25;
  double stride_floor = 1.0 / 1024.0;
  // Allowed |found - round(n_estimate)|; the O(ln T) fluctuation of the true
  // count around the smooth estimate makes an exact match too strict.
  int audit_slack = 1;
  double count_correction = kDefaultCountCorrection;
  unsigned threads = 1;
  ZetaConfig zeta{};
};

// All sign changes of Z in (t_min, t_max], refined by bisection to bracket
// width <= tol. Sampling is on the grid k * stride anchored at t = 0 and
// indices count zeros from t = 0, so results do not depend on t_min or on
// the thread count. Throws AuditFailure if the count cannot be reconciled
// with the counting formula before the stride reaches its floor.
ZeroTable scan_zeros(double t_min, double t_max, double tol, const ScanOptions& options = {});

struct ZeroCountEstimate {
  double t = 0.0;
  double n_main = 0.0;
  double n_correction = 0.0;
  double n_estimate = 0.0;
  double density = 0.0;
};

// Riemann-von Mangoldt count (T/2pi) ln(T/2pi) - T/2pi + correction and the
// density (1/2pi) ln(T/2pi).
ZeroCountEstimate count_zeros(double t, double correction = kDefaultCountCorrection);

// Smallest T >= 2 pi with count_zeros(T).n_estimate >= n.
double height_for_count(double n, double correction = kDefaultCountCorrection);

// 2 pi n / ln(n / 2 pi); DomainError for n <= 6.
double gamma_asymptotic(int n);

}  // namespace rzs
