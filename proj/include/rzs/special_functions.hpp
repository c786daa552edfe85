#pragma once

#include <complex>

namespace rzs {

// B_{2k} / (2k)! for k >= 1.
double bernoulli_over_factorial(int k);

struct LogGammaValue {
  std::complex<double> value;
  double error_bound;  // truncation of the Stirling series plus rounding
};

// ln Gamma(z) for Re z > 0 on the branch continuous from the positive real
// axis (so Im ln Gamma(1/4 + i t/2) is the unwrapped argument). Uses upward
// recurrence to |z| >= 16 followed by a 12-term Stirling series.
LogGammaValue log_gamma(std::complex<double> z);

}  // namespace rzs
