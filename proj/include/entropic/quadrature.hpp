// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>

namespace entropic {

struct QuadratureResult {
    double value = 0.0;
    bool converged = true;
    std::string note;
};

// Adaptive Gauss-Kronrod (G7/K15) over [a, b]. The integrand must be finite
// on the open interval; endpoint values are never requested.
QuadratureResult adaptive_gk(const std::function<double(double)>& f,
                             double a, double b,
                             double rel_tol = 1e-11,
                             int max_depth = 48);

// Integral over (0,1) of an integrand that may blow up at either endpoint.
// Panels shrink geometrically toward 0 and 1; when the panel contributions
// stop decaying, or the running total passes `magnitude_ceiling`, the
// integral is declared divergent and `converged` is false.
QuadratureResult integrate_unit(const std::function<double(double)>& f,
                                double rel_tol = 1e-11,
                                double magnitude_ceiling = 1e30);

}  // namespace entropic
