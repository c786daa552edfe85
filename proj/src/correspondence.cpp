#include "rzs/correspondence.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "rzs/bubble.hpp"
#include "rzs/error.hpp"

namespace rzs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kMinFitRows = 50;

double fit_ordinate(const CorrespondenceRow& row) {
  return row.gamma_n * std::log(static_cast<double>(row.n) / kTwoPi);
}

int decade_start(int n) {
  if (n < 10) return kFirstComparableIndex;
  int lo = 10;
  while (n >= 10 * lo) lo *= 10;
  return lo;
}

LinearFit fit_rows(const std::vector<const CorrespondenceRow*>& rows) {
  std::vector<double> xs;
  std::vector<double> ys;
  xs.reserve(rows.size());
  ys.reserve(rows.size());
  for (const auto* r : rows) {
    xs.push_back(static_cast<double>(r->n));
    ys.push_back(fit_ordinate(*r));
  }
  return least_squares(xs, ys);
}

}  // namespace

LinearFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw PreconditionError("least_squares: need two or more paired points");
  }
  const double count = static_cast<double>(xs.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= count;
  mean_y /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
  }
  if (sxx == 0.0) throw PreconditionError("least_squares: abscissae are all equal");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / count) / std::abs(mean_y);
  return fit;
}

CorrespondenceReport build_report(const ZeroTable& zeros, double m2, int n_max) {
  if (!(m2 > 0.0) || !std::isfinite(m2)) throw PreconditionError("build_report: m2 must be positive");
  if (n_max < 10) throw PreconditionError("build_report: n_max must be at least 10");

  // Entries must carry the consecutive indices 1..n_max.
  std::vector<double> gamma(static_cast<std::size_t>(n_max) + 1, 0.0);
  std::vector<bool> seen(gamma.size(), false);
  for (const auto& z : zeros.zeros) {
    if (z.index >= 1 && z.index <= n_max) {
      gamma[z.index] = z.gamma;
      seen[z.index] = true;
    }
  }
  for (int n = 1; n <= n_max; ++n) {
    if (!seen[n]) {
      throw InsufficientZeros(
          fmt::format("build_report: zero #{} missing; table needs indices 1..{}", n, n_max));
    }
  }

  CorrespondenceReport report;
  report.m2 = m2;
  report.rows.reserve(static_cast<std::size_t>(n_max - kFirstComparableIndex + 1));
  for (int n = kFirstComparableIndex; n <= n_max; ++n) {
    CorrespondenceRow row;
    row.n = n;
    row.gamma_n = gamma[n];
    row.prediction = correlator_sample(static_cast<double>(n), m2).correlator;
    row.asym_prediction = gamma_asymptotic(n);
    row.rel_dev = std::abs(row.gamma_n - row.prediction) / row.gamma_n;
    report.rows.push_back(row);
  }

  auto& summary = report.summary;
  for (const auto& row : report.rows) {
    summary.max_rel_dev = std::max(summary.max_rel_dev, row.rel_dev);
    const int lo = decade_start(row.n);
    if (summary.decades.empty() || summary.decades.back().n_lo != lo) {
      summary.decades.push_back({lo, lo < 10 ? 9 : 10 * lo - 1, 0, 0.0});
    }
    auto& d = summary.decades.back();
    ++d.count;
    d.mean_rel_dev += row.rel_dev;
  }
  for (auto& d : summary.decades) {
    d.n_hi = std::min(d.n_hi, n_max);
    d.mean_rel_dev /= static_cast<double>(d.count);
  }
  std::vector<const CorrespondenceRow*> all;
  for (const auto& row : report.rows) all.push_back(&row);
  summary.fit = fit_rows(all);
  summary.normalized_slope = summary.fit.slope / kTwoPi;
  return report;
}

LinearFit log_slope_fit(const CorrespondenceReport& report) {
  if (report.rows.size() < kMinFitRows) {
    throw PreconditionError(fmt::format("log_slope_fit: need at least {} rows (have {})", kMinFitRows,
                                        report.rows.size()));
  }
  std::vector<const CorrespondenceRow*> all;
  for (const auto& row : report.rows) all.push_back(&row);
  return fit_rows(all);
}

LinearFit log_slope_fit(const CorrespondenceReport& report, int n_lo, int n_hi) {
  std::vector<const CorrespondenceRow*> window;
  for (const auto& row : report.rows) {
    if (row.n >= n_lo && row.n <= n_hi) window.push_back(&row);
  }
  if (window.size() < kMinFitRows) {
    throw PreconditionError(fmt::format("log_slope_fit: window [{}, {}] holds {} rows, need {}", n_lo, n_hi,
                                        window.size(), kMinFitRows));
  }
  return fit_rows(window);
}

}  // namespace rzs
