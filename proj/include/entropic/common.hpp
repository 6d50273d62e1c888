// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace entropic {

// Distinguished infinite value. Divergent norms, conjugates and integrals are
// assigned this sentinel explicitly; it is never produced by letting a finite
// computation overflow.
inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool is_inf(double x) { return std::isinf(x) && x > 0.0; }
inline bool is_finite(double x) { return std::isfinite(x); }

// Semi-metric validation slack (triangle inequality is checked up to this).
inline constexpr double kMetricTol = 1e-9;

// Prefactor of the entropy integral. Exposed so sensitivity can be studied.
inline constexpr double kDefaultThetaPrefactor = 9.0;

// Clamp to the probability range.
inline double clamp01(double x) {
    if (std::isnan(x)) return 1.0;
    if (x < 0.0) return 0.0;
    if (x > 1.0) return 1.0;
    return x;
}

// Thread cap honoring ENTROPIC_TAIL_THREADS. Returns at least 1.
unsigned thread_cap();

// Runs fn(i) for i in [0, n). Chunk assignment is static, so any value
// computed per-index is identical for every worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace entropic
