#pragma once

// Pairs computed zeta zeros gamma_n with the sigma-model correlator sampled
// at t = n and summarises how far apart they are.

#include <cstddef>
#include <numbers>
#include <vector>

#include "rzs/zeta.hpp"

namespace rzs {

// With m^2 = 2 pi the correlator asymptote 2 pi t / ln(t/m^2) at t = n is
// literally 2 pi n / ln(n / 2 pi).
inline constexpr double kDefaultMass2 = 2.0 * std::numbers::pi;
inline constexpr int kFirstComparableIndex = 7;

struct CorrespondenceRow {
  int n = 0;
  double gamma_n = 0.0;
  double prediction = 0.0;       // 1 / Pi at t = n
  double asym_prediction = 0.0;  // 2 pi n / ln(n / 2 pi)
  double rel_dev = 0.0;          // |gamma_n - prediction| / gamma_n
};

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // RMS residual / mean(y)
};

// Rows with n in [n_lo, n_hi]; decades are [7, 9], [10, 99], [100, 999], ...
struct DecadeStat {
  int n_lo = 0;
  int n_hi = 0;
  std::size_t count = 0;
  double mean_rel_dev = 0.0;
};

struct CorrespondenceSummary {
  double max_rel_dev = 0.0;
  std::vector<DecadeStat> decades;
  // Least squares of gamma_n ln(n/2pi) against n over every row.
  LinearFit fit;
  // fit.slope / 2 pi, i.e. the slope against 2 pi n.
  double normalized_slope = 0.0;
};

struct CorrespondenceReport {
  double m2 = kDefaultMass2;
  std::vector<CorrespondenceRow> rows;
  CorrespondenceSummary summary;
};

// One row per n in [7, n_max]. Needs zeros indexed 1..n_max (a table scanned
// from t = 0); throws InsufficientZeros otherwise.
CorrespondenceReport build_report(const ZeroTable& zeros, double m2, int n_max);

// Ordinary least squares of y = gamma_n ln(n / 2 pi) on x = n. Requires at
// least 50 rows.
LinearFit log_slope_fit(const CorrespondenceReport& report);

// Same, restricted to rows with n_lo <= n <= n_hi.
LinearFit log_slope_fit(const CorrespondenceReport& report, int n_lo, int n_hi);

// Fit helper shared with the summary; requires xs.size() == ys.size() >= 2.
LinearFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace rzs
