#pragma once

#include <array>
#include <span>

namespace rzs::detail {

// Power series in z = 2p - 1 of the Riemann-Siegel correction functions
// C0..C4 on p in [0, 1).
extern const std::array<std::span<const double>, 5> kRiemannSiegelSeries;

}  // namespace rzs::detail
