#pragma once

#include <cmath>
#include <limits>

namespace orlicz {

// Values in [0, +inf] are carried as plain doubles; +inf is the IEEE infinity.
// The helpers below implement the conventions used by modulars and norms:
// 0 * inf = 0 and x + inf = inf.
using ExtReal = double;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool is_inf(double x) noexcept { return std::isinf(x) && x > 0; }

inline double ext_mul(double a, double b) noexcept {
  if (a == 0.0 || b == 0.0) return 0.0;
  return a * b;
}

inline double ext_add(double a, double b) noexcept {
  if (is_inf(a) || is_inf(b)) return kInf;
  return a + b;
}

// 1/x with 1/0 = inf and 1/inf = 0.
inline double ext_recip(double x) noexcept {
  if (x == 0.0) return kInf;
  if (is_inf(x)) return 0.0;
  return 1.0 / x;
}

}  // namespace orlicz
