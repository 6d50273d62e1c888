// SPDX-License-Identifier: Apache-2.0
//
// Independent brute-force oracles used by the test suites. Everything here
// deliberately avoids the library's optimizer/integration paths: plain dense
// grids and Riemann/Simpson sums only.
#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

namespace oracles {

// Dense inclusive-grid maximum of fn over [lo, hi].
inline double grid_max(const std::function<double(double)>& fn, double lo,
                       double hi, std::size_t n = (1u << 22)) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) /
                                  static_cast<double>(n - 1);
        const double v = fn(x);
        if (std::isfinite(v) && v > best) best = v;
    }
    return best;
}

inline double grid_min(const std::function<double(double)>& fn, double lo,
                       double hi, std::size_t n = (1u << 22)) {
    return -grid_max([&](double x) { return -fn(x); }, lo, hi, n);
}

// Composite Simpson on [a, b].
inline double simpson(const std::function<double(double)>& fn, double a, double b,
                      std::size_t n = 4096) {
    if (n % 2 == 1) ++n;
    const double h = (b - a) / static_cast<double>(n);
    double acc = fn(a) + fn(b);
    for (std::size_t i = 1; i < n; ++i)
        acc += fn(a + h * static_cast<double>(i)) * (i % 2 == 1 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

// Simpson over (0,1) with geometric panels toward both endpoints, for
// integrands singular at 0 or 1.
inline double simpson_unit_graded(const std::function<double(double)>& fn,
                                  int levels = 200, std::size_t n_per_panel = 64) {
    double total = 0.0;
    for (int k = 1; k <= levels; ++k) {
        const double hi = std::ldexp(1.0, -k);
        const double lo = hi * 0.5;
        total += simpson(fn, lo, hi, n_per_panel);
        total += simpson(fn, 1.0 - hi, 1.0 - lo, n_per_panel);
    }
    return total;
}

// Trapezoid of y over x (shared grid).
inline double trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
    double acc = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i)
        acc += 0.5 * (y[i] + y[i - 1]) * (x[i] - x[i - 1]);
    return acc;
}

}  // namespace oracles
