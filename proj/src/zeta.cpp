#include "rzs/zeta.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

#include <fmt/format.h>

#include "riemann_siegel_coefficients.hpp"
#include "rzs/error.hpp"
#include "rzs/special_functions.hpp"

namespace rzs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Gabcke's bounds |R_K| <= d_K (t/2pi)^{-(2K+3)/4} for the remainder after
// C0..C_K; proven for t >= 200 and used here as the estimate at all heights.
constexpr std::array<double, 5> kGabckeBound = {0.127, 0.053, 0.011, 0.031, 0.017};

void check_height(double t, const ZetaConfig& config) {
  if (!std::isfinite(t) || std::abs(t) > config.max_height) {
    throw PrecisionExceeded(
        fmt::format("height {} outside the supported range |t| <= {}", t, config.max_height));
  }
}

double horner(std::span<const double> coeffs, double z) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

CriticalLineSample z_euler_maclaurin(double t) {
  const ThetaValue th = theta_with_bound(t);
  double zeta_err = 0.0;
  const std::complex<double> zeta = zeta_euler_maclaurin({0.5, t}, &zeta_err);
  const std::complex<double> rotated = std::polar(1.0, th.value) * zeta;
  const double err = zeta_err + std::abs(zeta) * th.error_bound + 4.0 * kEps * std::abs(zeta);
  return {t, rotated.real(), th.value, ZetaMethod::euler_maclaurin, err};
}

CriticalLineSample z_riemann_siegel(double t, int corrections) {
  const ThetaValue th = theta_with_bound(t);
  const double tau = t / kTwoPi;
  const double root = std::sqrt(tau);
  const auto n_terms = static_cast<long>(std::floor(root));
  const double frac = root - static_cast<double>(n_terms);

  double sum = 0.0;
  for (long n = 1; n <= n_terms; ++n) {
    const double dn = static_cast<double>(n);
    sum += std::cos(th.value - t * std::log(dn)) / std::sqrt(dn);
  }
  sum *= 2.0;

  const double z = 2.0 * frac - 1.0;
  const double step = 1.0 / root;  // tau^{-1/2}
  double correction = 0.0;
  double weight = 1.0;
  for (int k = 0; k < corrections; ++k) {
    correction += weight * horner(detail::kRiemannSiegelSeries[k], z);
    weight *= step;
  }
  const double sign = (n_terms % 2 == 1) ? 1.0 : -1.0;  // (-1)^{N-1}
  const double quarter = std::pow(tau, -0.25);
  const double value = sum + sign * quarter * correction;

  const double truncation =
      kGabckeBound[corrections - 1] * std::pow(tau, -(2.0 * corrections + 1.0) / 4.0);
  const double phase_err = th.error_bound + 4.0 * kEps * (std::abs(th.value) + t * std::log(root + 1.0));
  const double rounding = 4.0 * root * phase_err + 8.0 * kEps * (root + 1.0);
  return {t, value, th.value, ZetaMethod::riemann_siegel, truncation + rounding};
}

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, const Fn& fn) {
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
}

bool positive(double z) { return z >= 0.0; }

// Values of Z on the grid i * stride for i = 0..last, plus t_max itself when
// t_max is off-grid.
struct Grid {
  double stride;
  double t_max;
  std::vector<double> values;  // indices 0..last
  double tail_value;           // Z(t_max)
  bool has_tail;

  double point(std::size_t i) const { return static_cast<double>(i) * stride; }

  std::size_t sign_changes() const {
    std::size_t count = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (positive(values[i - 1]) != positive(values[i])) ++count;
    }
    if (has_tail && positive(values.back()) != positive(tail_value)) ++count;
    return count;
  }
};

std::size_t grid_last(double t_max, double stride) {
  return static_cast<std::size_t>(std::floor(t_max / stride));
}

Grid initial_grid(double t_max, double stride, const ScanOptions& opts) {
  Grid g{stride, t_max, {}, 0.0, false};
  g.values.resize(grid_last(t_max, stride) + 1);
  parallel_for(g.values.size(), opts.threads,
               [&](std::size_t i) { g.values[i] = z_sample(g.point(i), opts.zeta).z_value; });
  g.has_tail = g.point(g.values.size() - 1) < t_max;
  if (g.has_tail) g.tail_value = z_sample(t_max, opts.zeta).z_value;
  return g;
}

// Halves the stride, reusing every existing sample.
Grid refine_grid(const Grid& coarse, const ScanOptions& opts) {
  Grid g{coarse.stride / 2.0, coarse.t_max, {}, coarse.tail_value, false};
  g.values.resize(grid_last(coarse.t_max, g.stride) + 1);
  std::vector<std::size_t> fresh;
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    if (i % 2 == 0 && i / 2 < coarse.values.size()) {
      g.values[i] = coarse.values[i / 2];
    } else {
      fresh.push_back(i);
    }
  }
  parallel_for(fresh.size(), opts.threads, [&](std::size_t k) {
    g.values[fresh[k]] = z_sample(g.point(fresh[k]), opts.zeta).z_value;
  });
  g.has_tail = g.point(g.values.size() - 1) < coarse.t_max;
  return g;
}

ZeroEntry bisect(double lo, double hi, double z_lo, double tol, const ZetaConfig& config) {
  const bool lo_positive = positive(z_lo);
  while (hi - lo > tol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (positive(z_sample(mid, config).z_value) == lo_positive) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {0, lo + 0.5 * (hi - lo), lo, hi, tol};
}

}  // namespace

std::string_view to_string(ZetaMethod method) {
  switch (method) {
    case ZetaMethod::euler_maclaurin:
      return "euler_maclaurin";
    case ZetaMethod::riemann_siegel:
      return "riemann_siegel";
  }
  return "unknown";
}

ThetaValue theta_with_bound(double t) {
  if (!std::isfinite(t) || std::abs(t) > kMaxHeight) {
    throw PrecisionExceeded(fmt::format("theta: height {} outside |t| <= {}", t, kMaxHeight));
  }
  if (t < 0.0) {
    const ThetaValue pos = theta_with_bound(-t);
    return {-pos.value, pos.error_bound};
  }
  const LogGammaValue lg = log_gamma({0.25, 0.5 * t});
  const double shift = 0.5 * t * std::log(kPi);
  const double value = lg.value.imag() - shift;
  return {value, lg.error_bound + 2.0 * kEps * (std::abs(shift) + std::abs(value))};
}

double theta(double t, double tol) {
  const ThetaValue v = theta_with_bound(t);
  if (v.error_bound > tol) {
    throw PrecisionExceeded(
        fmt::format("theta({}): error bound {:.3g} exceeds tolerance {:.3g}", t, v.error_bound, tol));
  }
  return v.value;
}

std::complex<double> zeta_euler_maclaurin(std::complex<double> s, double* err) {
  const double sigma = s.real();
  if (!(sigma > 0.0)) throw DomainError("zeta_euler_maclaurin: requires Re s > 0");
  if (std::abs(s - 1.0) < 1e-12) throw DomainError("zeta_euler_maclaurin: pole at s = 1");

  const int n_cut = 10 + static_cast<int>(std::ceil(std::abs(s.imag())));
  const double big_n = n_cut;
  const double ln_n = std::log(big_n);

  std::complex<double> sum = 0.0;
  double rounding = 0.0;
  for (int n = n_cut - 1; n >= 1; --n) {
    const double ln_k = std::log(static_cast<double>(n));
    const std::complex<double> term = std::exp(-s * ln_k);
    sum += term;
    rounding += std::abs(term) * (std::abs(s) * ln_k + 2.0);
  }
  const std::complex<double> n_pow = std::exp(-s * ln_n);  // N^{-s}
  sum += n_pow * big_n / (s - 1.0) + 0.5 * n_pow;

  // T_k = B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
  std::complex<double> rising = s;
  std::complex<double> power = n_pow / big_n;
  const double inv_n2 = 1.0 / (big_n * big_n);
  constexpr int kMaxTerms = 40;
  double bound = std::numeric_limits<double>::infinity();
  for (int k = 1; k < kMaxTerms; ++k) {
    const std::complex<double> term = bernoulli_over_factorial(k) * rising * power;
    sum += term;
    const std::complex<double> next_rising = rising * (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    const std::complex<double> next_power = power * inv_n2;
    const double next_term = std::abs(bernoulli_over_factorial(k + 1) * next_rising * next_power);
    const double remainder =
        std::abs(s + (2.0 * k + 1.0)) / (sigma + 2.0 * k + 1.0) * next_term;
    bound = remainder;
    rising = next_rising;
    power = next_power;
    if (remainder < 1e-3 * kEps * std::max(1.0, std::abs(sum))) break;
  }
  if (err != nullptr) *err = bound + kEps * rounding;
  return sum;
}

CriticalLineSample z_sample(double t, const ZetaConfig& config) {
  check_height(t, config);
  if (config.rs_corrections < 1 || config.rs_corrections > 5) {
    throw PreconditionError("rs_corrections must lie in 1..5");
  }
  const double height = std::abs(t);
  CriticalLineSample s = height < config.crossover ? z_euler_maclaurin(height)
                                                  : z_riemann_siegel(height, config.rs_corrections);
  s.t = t;
  if (t < 0.0) s.theta_value = -s.theta_value;
  return s;
}

CriticalLineSample z_function(double t, double tol, const ZetaConfig& config) {
  if (!(tol > 0.0)) throw PreconditionError("z_function: tol must be positive");
  CriticalLineSample s = z_sample(t, config);
  if (s.est_abs_error > tol) {
    throw PrecisionExceeded(fmt::format("Z({}) via {}: error estimate {:.3g} exceeds tolerance {:.3g}",
                                        t, to_string(s.method), s.est_abs_error, tol));
  }
  return s;
}

ZeroTable scan_zeros(double t_min, double t_max, double tol, const ScanOptions& options) {
  if (!(t_min >= 0.0) || !(t_max > t_min)) {
    throw PreconditionError(fmt::format("scan_zeros: need 0 <= t_min < t_max (got {}, {})", t_min, t_max));
  }
  if (!(tol > 0.0)) throw PreconditionError("scan_zeros: tol must be positive");
  check_height(t_max, options.zeta);
  if (tol < 4.0 * kEps * t_max) {
    throw PrecisionExceeded(fmt::format("scan_zeros: tol {:.3g} below double resolution at t = {}", tol, t_max));
  }
  if (!(options.initial_stride > 0.0) || options.stride_floor > options.initial_stride) {
    throw PreconditionError("scan_zeros: invalid stride settings");
  }

  const auto expected =
      static_cast<long>(std::llround(count_zeros(t_max, options.count_correction).n_estimate));

  Grid grid = initial_grid(t_max, options.initial_stride, options);
  std::size_t previous = grid.sign_changes();
  bool accepted = false;
  while (!accepted) {
    if (grid.stride / 2.0 < options.stride_floor) {
      throw AuditFailure(fmt::format(
          "scan to t = {} found {} zeros but the counting formula gives {} (stride floor {} reached)",
          t_max, previous, expected, options.stride_floor));
    }
    grid = refine_grid(grid, options);
    const std::size_t found = grid.sign_changes();
    accepted = found == previous && std::abs(static_cast<long>(found) - expected) <= options.audit_slack;
    previous = found;
  }

  struct Bracket {
    double lo, hi, z_lo;
  };
  std::vector<Bracket> brackets;
  for (std::size_t i = 1; i < grid.values.size(); ++i) {
    if (positive(grid.values[i - 1]) != positive(grid.values[i])) {
      brackets.push_back({grid.point(i - 1), grid.point(i), grid.values[i - 1]});
    }
  }
  if (grid.has_tail && positive(grid.values.back()) != positive(grid.tail_value)) {
    brackets.push_back({grid.point(grid.values.size() - 1), t_max, grid.values.back()});
  }

  std::vector<ZeroEntry> all(brackets.size());
  parallel_for(brackets.size(), options.threads, [&](std::size_t i) {
    all[i] = bisect(brackets[i].lo, brackets[i].hi, brackets[i].z_lo, tol, options.zeta);
    all[i].index = static_cast<int>(i) + 1;
  });

  ZeroTable table;
  table.t_max = t_max;
  table.stride = grid.stride;
  for (const auto& z : all) {
    if (z.gamma > t_min) table.zeros.push_back(z);
  }
  return table;
}

ZeroCountEstimate count_zeros(double t, double correction) {
  if (!(t > 0.0) || !std::isfinite(t)) throw PreconditionError("count_zeros: t must be positive and finite");
  const double x = t / kTwoPi;
  const double log_x = std::log(x);
  ZeroCountEstimate est;
  est.t = t;
  est.n_main = x * log_x - x;
  est.n_correction = correction;
  est.n_estimate = est.n_main + est.n_correction;
  est.density = log_x / kTwoPi;
  if (!std::isfinite(est.n_estimate)) throw DomainError("count_zeros: overflow");
  return est;
}

double height_for_count(double n, double correction) {
  if (!std::isfinite(n)) throw PreconditionError("height_for_count: n must be finite");
  double lo = kTwoPi;
  if (count_zeros(lo, correction).n_estimate >= n) return lo;
  double hi = 2.0 * lo;
  while (count_zeros(hi, correction).n_estimate < n) {
    lo = hi;
    hi *= 2.0;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (count_zeros(mid, correction).n_estimate < n ? lo : hi) = mid;
  }
  return hi;
}

double gamma_asymptotic(int n) {
  if (n <= 6) {
    throw DomainError(fmt::format("gamma_asymptotic: n = {} gives ln(n/2pi) <= 0", n));
  }
  const double dn = n;
  return kTwoPi * dn / std::log(dn / kTwoPi);
}

}  // namespace rzs
