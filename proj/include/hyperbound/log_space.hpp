#pragma once

// Representations for quantities far outside the range of any floating point
// type. Bounds of shape 2^{(nt)^{c n^4 t}} are only ever handled through
// their logarithms.

#include <cmath>
#include <limits>

namespace hyperbound {

/// A positive quantity known either directly or only through log2.
struct Magnitude {
  /// NaN when the quantity is not representable as a double.
  double value = std::numeric_limits<double>::quiet_NaN();
  double log2 = 0.0;

  static Magnitude exact(double v) { return {v, std::log2(v)}; }
  static Magnitude from_log2(double l) {
    if (l < 1000.0 && l > -1000.0) return {std::exp2(l), l};
    return {std::numeric_limits<double>::quiet_NaN(), l};
  }
  bool symbolic() const { return std::isnan(value); }
};

/// Q with log2|log2 Q| <= level2; `sign` is the sign of log2 Q. A systole
/// lower bound R >= 2^{-L} is stored as {log2 L, -1}.
struct LogLogBound {
  double level2 = 0.0;
  int sign = 1;
};

/// log2(2^a + 2^b) without overflow.
inline double log2_add(double a, double b) {
  if (a < b) std::swap(a, b);
  if (b == -std::numeric_limits<double>::infinity()) return a;
  return a + std::log2(1.0 + std::exp2(b - a));
}

}  // namespace hyperbound
