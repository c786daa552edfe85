#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "riemann_siegel_coefficients.hpp"
#include "rzs/error.hpp"
#include "rzs/zeta.hpp"
#include "shared_tables.hpp"

using namespace rzs;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Reference values from a 30-digit mpmath evaluation.
constexpr double kTheta100 = 87.9721652317872196;
constexpr double kZetaHalf = -1.46035450880958681;
constexpr double kGamma1 = 14.1347251417346938;
constexpr double kGamma29 = 98.8311942181936922;
constexpr double kZ1000 = 0.997794637521586614;

double horner(std::span<const double> c, double z) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

TEST_SUITE("theta") {
  TEST_CASE("theta is odd and vanishes at the origin") {
    CHECK(theta(0.0) == 0.0);
    CHECK(theta(-50.0) == -theta(50.0));
  }

  TEST_CASE("theta(100) against Binet log-gamma quadrature") {
    const double oracle = oracle::theta(100.0);
    CHECK(std::abs(theta(100.0) - oracle) < 1e-10);
    CHECK(std::abs(oracle - kTheta100) < 1e-10);
  }

  TEST_CASE("theta matches the quadrature oracle across heights") {
    for (double t : {0.5, 3.0, 17.0, 42.0, 333.0, 2500.0}) {
      CHECK(std::abs(theta(t) - oracle::theta(t)) < 1e-10 * std::max(1.0, std::abs(oracle::theta(t))));
    }
  }

  TEST_CASE("theta refuses unsupported heights and unreachable tolerances") {
    CHECK_THROWS_AS(theta(2.0e4), PrecisionExceeded);
    CHECK_THROWS_AS(theta(5000.0, 1e-16), PrecisionExceeded);
    CHECK_NOTHROW(theta(1.0e4));
  }
}

TEST_SUITE("riemann-siegel coefficients") {
  TEST_CASE("C0 series reproduces the closed form") {
    const auto& c0 = detail::kRiemannSiegelSeries[0];
    for (double p : {0.0, 0.1, 0.2, 0.4, 0.5, 0.6, 0.9, 0.999}) {
      const double direct = std::cos(kTwoPi * (p * p - p - 1.0 / 16.0)) / std::cos(kTwoPi * p);
      CHECK(horner(c0, 2.0 * p - 1.0) == doctest::Approx(direct).epsilon(1e-14));
    }
  }

  TEST_CASE("C1 equals -Psi'''/(96 pi^2) by finite differences of C0") {
    const auto& c0 = detail::kRiemannSiegelSeries[0];
    const auto& c1 = detail::kRiemannSiegelSeries[1];
    const double h = 1e-2;
    for (double p : {0.3, 0.5, 0.71}) {
      auto psi = [&](double q) { return horner(c0, 2.0 * q - 1.0); };
      const double third = (psi(p + 2 * h) - 2 * psi(p + h) + 2 * psi(p - h) - psi(p - 2 * h)) / (2 * h * h * h);
      const double expected = -third / (96.0 * std::numbers::pi * std::numbers::pi);
      CHECK(horner(c1, 2.0 * p - 1.0) == doctest::Approx(expected).epsilon(2e-3));
    }
  }

  TEST_CASE("each additional correction term reduces the error at t = 1000") {
    double previous = 1.0;
    for (int k = 1; k <= 5; ++k) {
      ZetaConfig cfg;
      cfg.rs_corrections = k;
      const double err = std::abs(z_sample(1000.0, cfg).z_value - kZ1000);
      CHECK(err < previous);
      previous = err;
    }
    CHECK(previous < 1e-9);
  }
}

TEST_SUITE("z_function") {
  TEST_CASE("Z(0) = zeta(1/2) against the Euler-Maclaurin oracle") {
    const auto s = z_function(0.0, 1e-10);
    const double oracle = oracle::zeta({0.5, 0.0}).real();
    CHECK(std::abs(oracle - kZetaHalf) < 1e-12);
    CHECK(std::abs(s.z_value - oracle) < 1e-10);
    CHECK(s.method == ZetaMethod::euler_maclaurin);
    CHECK(s.est_abs_error <= 1e-10);
  }

  TEST_CASE("first zero is bracketed by 14.0 and 14.2") {
    const double a = z_function(14.0, 1e-8).z_value;
    const double b = z_function(14.2, 1e-8).z_value;
    CHECK(std::signbit(a) != std::signbit(b));
    CHECK(std::signbit(oracle::hardy_z(14.0)) != std::signbit(oracle::hardy_z(14.2)));
  }

  TEST_CASE("method dispatch at the crossover") {
    CHECK(z_sample(29.99).method == ZetaMethod::euler_maclaurin);
    CHECK(z_sample(30.0).method == ZetaMethod::riemann_siegel);
    CHECK(z_function(500.0, 1e-4).method == ZetaMethod::riemann_siegel);
    ZetaConfig cfg;
    cfg.crossover = 100.0;
    CHECK(z_sample(50.0, cfg).method == ZetaMethod::euler_maclaurin);
  }

  TEST_CASE("precision-exceeded when the tolerance is out of reach") {
    CHECK_THROWS_AS(z_function(500.0, 1e-14), PrecisionExceeded);
    CHECK_THROWS_AS(z_function(2.0e4, 1.0), PrecisionExceeded);
    CHECK_THROWS_AS(z_function(10.0, 0.0), PreconditionError);
    ZetaConfig cfg;
    cfg.rs_corrections = 2;
    CHECK_THROWS_AS(z_function(40.0, 1e-6, cfg), PrecisionExceeded);
    cfg.rs_corrections = 7;
    CHECK_THROWS_AS(z_sample(40.0, cfg), PreconditionError);
  }

  TEST_CASE("Euler-Maclaurin zeta against the oracle and known values") {
    double err = 0.0;
    const auto z2 = zeta_euler_maclaurin({2.0, 0.0}, &err);
    CHECK(z2.real() == doctest::Approx(std::numbers::pi * std::numbers::pi / 6.0).epsilon(1e-14));
    CHECK(err < 1e-13);
    for (double t : {1.0, 7.5, 21.0, 29.0, 75.0}) {
      const std::complex<double> s(0.5, t);
      CHECK(std::abs(zeta_euler_maclaurin(s) - oracle::zeta(s)) < 1e-11);
    }
    CHECK_THROWS_AS(zeta_euler_maclaurin({1.0, 0.0}), DomainError);
  }

  TEST_CASE("rotated zeta is real below the crossover") {
    for (double t : {2.0, 11.0, 19.5, 28.0}) {
      const auto z = std::polar(1.0, theta(t)) * zeta_euler_maclaurin({0.5, t});
      CHECK(std::abs(z.imag()) < 1e-11);
    }
  }

  TEST_CASE("property: parity of theta and Z at random heights") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(0.5, 2000.0);
    for (int i = 0; i < 20; ++i) {
      const double t = dist(rng);
      CHECK(theta(-t) == -theta(t));
      CHECK(z_sample(-t).z_value == z_sample(t).z_value);
    }
  }

  TEST_CASE("property: |Z| equals |zeta| from the oracle within 2 tol") {
    const double tol = 1e-3;
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(1.0, 80.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double t = dist(rng);
      const auto s = z_function(t, tol);
      CHECK(std::isfinite(s.est_abs_error));
      CHECK(s.est_abs_error > 0.0);
      const double diff = std::abs(std::abs(s.z_value) - std::abs(oracle::zeta({0.5, t})));
      CHECK(diff <= 2.0 * tol);
      worst = std::max(worst, diff);
    }
    // the actual agreement is far tighter than the stated bound
    CHECK(worst < 1e-5);
  }
}

TEST_SUITE("scan_zeros") {
  TEST_CASE("one zero below 15") {
    const auto table = scan_zeros(0.0, 15.0, 1e-8);
    REQUIRE(table.size() == 1);
    CHECK(table.zeros[0].index == 1);
    CHECK(std::abs(table.zeros[0].gamma - kGamma1) < 1e-8);
  }

  TEST_CASE("first zero agrees with an oracle bisection") {
    double lo = 14.0;
    double hi = 14.2;
    const bool lo_sign = std::signbit(oracle::hardy_z(lo, 100));
    while (hi - lo > 1e-10) {
      const double mid = 0.5 * (lo + hi);
      (std::signbit(oracle::hardy_z(mid, 100)) == lo_sign ? lo : hi) = mid;
    }
    const auto table = scan_zeros(0.0, 15.0, 1e-8);
    CHECK(std::abs(table.zeros[0].gamma - 0.5 * (lo + hi)) < 1e-8);
  }

  TEST_CASE("29 zeros below 100, matching an oracle sign-change count") {
    const auto table = scan_zeros(0.0, 100.0, 1e-8);
    REQUIRE(table.size() == 29);
    CHECK(std::abs(table.zeros.back().gamma - kGamma29) < 1e-7);
    CHECK(std::abs(count_zeros(100.0).n_estimate - 29.0) <= 1.0);

    int changes = 0;
    double prev = oracle::hardy_z(0.0, 100);
    for (int i = 1; i <= 2000; ++i) {
      const double z = oracle::hardy_z(0.05 * i, 100);
      if (std::signbit(z) != std::signbit(prev)) ++changes;
      prev = z;
    }
    CHECK(changes == 29);
  }

  TEST_CASE("ranges without a sign change give an empty table") {
    CHECK(scan_zeros(0.0, 10.0, 1e-8).empty());
    CHECK(scan_zeros(15.0, 20.0, 1e-8).empty());
  }

  TEST_CASE("indices count from t = 0 whatever t_min is") {
    const auto table = scan_zeros(20.0, 30.0, 1e-8);
    REQUIRE(table.size() == 2);
    CHECK(table.zeros[0].index == 2);
    CHECK(table.zeros[1].index == 3);
  }

  TEST_CASE("scan completeness against the counting formula") {
    // N(T) at these heights from an independent arbitrary-precision count
    const std::pair<double, std::size_t> cases[] = {{50.0, 10}, {100.0, 29}, {250.0, 108}, {500.0, 269}};
    for (auto [t_max, exact] : cases) {
      const auto table = scan_zeros(0.0, t_max, 1e-8);
      const long rounded = std::lround(count_zeros(t_max).n_estimate);
      CHECK(std::abs(static_cast<long>(table.size()) - rounded) <= 1);
      CHECK(table.size() == exact);
    }
  }

  TEST_CASE("property: bracket soundness and ordering") {
    const auto& table = testdata::zeros_to_500();
    REQUIRE(!table.empty());
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto& z = table.zeros[i];
      CHECK(z.index == static_cast<int>(i) + 1);
      CHECK(z.bracket_lo < z.gamma);
      CHECK(z.gamma < z.bracket_hi);
      CHECK(z.bracket_hi - z.bracket_lo <= z.refined_tol);
      CHECK(z_sample(z.bracket_lo).z_value * z_sample(z.bracket_hi).z_value < 0.0);
      if (i > 0) CHECK(z.gamma > table.zeros[i - 1].gamma);
    }
  }

  TEST_CASE("halving the stride reproduces the zero set") {
    const auto& base = testdata::zeros_to_500();
    ScanOptions fine;
    fine.initial_stride = 0.125;
    const auto other = scan_zeros(0.0, 500.0, 1e-8, fine);
    REQUIRE(other.size() == base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      CHECK(other.zeros[i].index == base.zeros[i].index);
      CHECK(std::abs(other.zeros[i].gamma - base.zeros[i].gamma) <= 1e-8);
    }
  }

  TEST_CASE("output is independent of thread count and partition") {
    const auto& base = testdata::zeros_to_500();
    ScanOptions threaded;
    threaded.threads = 3;
    const auto other = scan_zeros(0.0, 500.0, 1e-8, threaded);
    REQUIRE(other.size() == base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      CHECK(other.zeros[i].gamma == base.zeros[i].gamma);
      CHECK(other.zeros[i].bracket_lo == base.zeros[i].bracket_lo);
    }
    const auto upper = scan_zeros(250.0, 500.0, 1e-8);
    const auto first = static_cast<std::size_t>(upper.zeros.front().index - 1);
    for (std::size_t i = 0; i < upper.size(); ++i) {
      CHECK(upper.zeros[i].gamma == base.zeros[first + i].gamma);
      CHECK(upper.zeros[i].index == base.zeros[first + i].index);
    }
  }

  TEST_CASE("audit failure when the count cannot be reconciled") {
    ScanOptions opts;
    opts.count_correction = 5.0;
    opts.stride_floor = 1.0 / 16.0;
    CHECK_THROWS_AS(scan_zeros(0.0, 100.0, 1e-8, opts), AuditFailure);
    ScanOptions frozen;
    frozen.stride_floor = frozen.initial_stride;
    CHECK_THROWS_AS(scan_zeros(0.0, 100.0, 1e-8, frozen), AuditFailure);
  }

  TEST_CASE("precondition and precision errors") {
    CHECK_THROWS_AS(scan_zeros(-1.0, 10.0, 1e-8), PreconditionError);
    CHECK_THROWS_AS(scan_zeros(10.0, 10.0, 1e-8), PreconditionError);
    CHECK_THROWS_AS(scan_zeros(0.0, 10.0, 0.0), PreconditionError);
    CHECK_THROWS_AS(scan_zeros(0.0, 2.0e4, 1e-8), PrecisionExceeded);
    CHECK_THROWS_AS(scan_zeros(0.0, 5000.0, 1e-14), PrecisionExceeded);
  }
}

TEST_SUITE("count_zeros") {
  TEST_CASE("main term at 2 pi and density at 2 pi e") {
    CHECK(count_zeros(kTwoPi).n_main == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(count_zeros(kTwoPi * std::numbers::e).density == doctest::Approx(1.0 / kTwoPi).epsilon(1e-15));
  }

  TEST_CASE("estimate within 1 of the 29 zeros below 100") {
    const auto est = count_zeros(100.0);
    CHECK(std::abs(est.n_estimate - 29.0) <= 1.0);
  }

  TEST_CASE("correction is configurable and additive") {
    const auto bare = count_zeros(300.0, 0.0);
    const auto corrected = count_zeros(300.0);
    CHECK(bare.n_estimate == bare.n_main);
    CHECK(corrected.n_correction == 7.0 / 8.0);
    CHECK(corrected.n_estimate == corrected.n_main + corrected.n_correction);
  }

  TEST_CASE("property: monotone estimate and non-negative density beyond 2 pi") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dist(kTwoPi, 1.0e4);
    for (int i = 0; i < 200; ++i) {
      double a = dist(rng);
      double b = dist(rng);
      if (a > b) std::swap(a, b);
      CHECK(count_zeros(a).n_estimate <= count_zeros(b).n_estimate);
      CHECK(count_zeros(a).density >= 0.0);
    }
  }

  TEST_CASE("invalid heights") {
    CHECK_THROWS_AS(count_zeros(0.0), PreconditionError);
    CHECK_THROWS_AS(count_zeros(-3.0), PreconditionError);
  }

  TEST_CASE("height_for_count inverts the estimate") {
    const double t = height_for_count(100.0);
    CHECK(count_zeros(t).n_estimate == doctest::Approx(100.0).epsilon(1e-10));
  }
}

TEST_SUITE("gamma_asymptotic") {
  TEST_CASE("direct substitution") {
    CHECK(gamma_asymptotic(17) == doctest::Approx(kTwoPi * 17.0 / std::log(17.0 / kTwoPi)).epsilon(1e-15));
    CHECK(gamma_asymptotic(100) == doctest::Approx(227.07).epsilon(2e-4));
    const double g7 = gamma_asymptotic(7);
    CHECK(std::isfinite(g7));
    CHECK(g7 > 0.0);
  }

  TEST_CASE("domain error for n <= 6") {
    for (int n : {-1, 0, 1, 6}) CHECK_THROWS_AS(gamma_asymptotic(n), DomainError);
  }

  TEST_CASE("scanned zeros approach the asymptote") {
    const auto& table = testdata::zeros_to_5500();
    REQUIRE(table.size() >= 5000);
    // The [0.8, 1.2] band holds from n = 26 on; at n = 10 the ratio is still
    // 0.37 because ln(n / 2 pi) is tiny there.
    for (int n = 26; n <= 5000; ++n) {
      const double ratio = table.zeros[n - 1].gamma / gamma_asymptotic(n);
      CHECK(ratio >= 0.8);
      CHECK(ratio <= 1.2);
    }
    CHECK(table.zeros[9].gamma / gamma_asymptotic(10) == doctest::Approx(0.368).epsilon(5e-3));
    CHECK(table.zeros[24].gamma / gamma_asymptotic(25) < 0.8);
  }
}
