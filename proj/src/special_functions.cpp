#include "rzs/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "rzs/error.hpp"

namespace rzs {

namespace {

constexpr int kBernoulliTable = 64;

// B_{2k}/(2k)! = (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}
std::array<double, kBernoulliTable + 1> make_bernoulli_table() {
  std::array<double, kBernoulliTable + 1> table{};
  const double pi = std::numbers::pi;
  for (int k = 1; k <= kBernoulliTable; ++k) {
    double zeta2k;
    if (k == 1) {
      zeta2k = pi * pi / 6.0;
    } else if (k == 2) {
      zeta2k = std::pow(pi, 4) / 90.0;
    } else if (k == 3) {
      zeta2k = std::pow(pi, 6) / 945.0;
    } else {
      zeta2k = 0.0;
      for (int n = 400; n >= 1; --n) zeta2k += std::pow(static_cast<double>(n), -2.0 * k);
    }
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    table[k] = sign * 2.0 * zeta2k * std::pow(2.0 * pi, -2.0 * k);
  }
  return table;
}

const std::array<double, kBernoulliTable + 1>& bernoulli_table() {
  static const auto table = make_bernoulli_table();
  return table;
}

constexpr int kStirlingTerms = 12;
constexpr double kShiftRadius = 16.0;

}  // namespace

double bernoulli_over_factorial(int k) {
  if (k < 1 || k > kBernoulliTable) throw PreconditionError("bernoulli_over_factorial: k out of range");
  return bernoulli_table()[k];
}

LogGammaValue log_gamma(std::complex<double> z) {
  if (!(z.real() > 0.0)) throw DomainError("log_gamma: requires Re z > 0");
  constexpr double eps = std::numeric_limits<double>::epsilon();

  // ln Gamma(z) = ln Gamma(z + k) - sum_{j<k} ln(z + j). Each ln(z + j) has
  // Re(z + j) > 0, so the principal logs add up to the continuous branch.
  std::complex<double> shift_sum = 0.0;
  double rounding = 0.0;
  while (std::abs(z) < kShiftRadius) {
    shift_sum += std::log(z);
    rounding += eps * (std::abs(std::log(z)) + 1.0);
    z += 1.0;
  }

  const std::complex<double> inv = 1.0 / z;
  const std::complex<double> inv2 = inv * inv;
  std::complex<double> series = 0.0;
  std::complex<double> power = inv;
  double factorial = 1.0;  // (2k-2)!
  for (int k = 1; k <= kStirlingTerms; ++k) {
    if (k > 1) factorial *= (2.0 * k - 3.0) * (2.0 * k - 2.0);
    series += bernoulli_over_factorial(k) * factorial * power;
    power *= inv2;
  }
  const std::complex<double> main =
      (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi);

  // Remainder is bounded by the first omitted term times sec^{2K+2}(arg z / 2).
  const int next = kStirlingTerms + 1;
  const double next_factorial = factorial * (2.0 * next - 3.0) * (2.0 * next - 2.0);
  const double sec = 1.0 / std::cos(0.5 * std::arg(z));
  const double truncation = std::abs(bernoulli_over_factorial(next)) * next_factorial *
                            std::abs(power) * std::pow(sec, 2 * next);
  rounding += 8.0 * eps * std::abs(main);

  return {main + series - shift_sum, truncation + rounding};
}

}  // namespace rzs
