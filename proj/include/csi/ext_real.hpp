#pragma once

#include <cmath>
#include <limits>

namespace csi {

// Robustness values live on the extended real line. IEEE doubles represent
// +/-inf natively; the monitor only ever negates or min/max-combines
// infinities, so no indeterminate forms arise.
inline constexpr double kPosInf = std::numeric_limits<double>::infinity();
inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// sign(a) * inf with sign(0) * inf = -inf.
inline double sign_inf(double a) { return a > 0.0 ? kPosInf : kNegInf; }

inline bool is_finite(double a) { return std::isfinite(a); }

}  // namespace csi
