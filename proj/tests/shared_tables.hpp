#pragma once

#include "rzs/zeta.hpp"

namespace testdata {

// Zeros up to t = 5500 (5000+ entries); scanned once per test binary.
inline const rzs::ZeroTable& zeros_to_5500() {
  static const rzs::ZeroTable table = rzs::scan_zeros(0.0, 5500.0, 1e-8);
  return table;
}

inline const rzs::ZeroTable& zeros_to_500() {
  static const rzs::ZeroTable table = rzs::scan_zeros(0.0, 500.0, 1e-8);
  return table;
}

}  // namespace testdata
