// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "entropic/common.hpp"
#include "entropic/gls.hpp"
#include "entropic/psi.hpp"

namespace entropic {

// Scalar function on a real interval; the right end may be open (the value
// there is a continuous extension) or +inf (the domain is unbounded).
struct ScalarFunctionOnInterval {
    double lo = 0.0;
    double hi = 1.0;
    bool right_open = false;
    std::function<double(double)> eval;

    static ScalarFunctionOnInterval closed_form(std::function<double(double)> f,
                                                double lo, double hi,
                                                bool right_open = false);
    // Linear interpolation through >= 16 strictly increasing nodes.
    static ScalarFunctionOnInterval tabulated(std::vector<double> xs,
                                              std::vector<double> ys);
};

struct ExtremumResult {
    double value = 0.0;
    double arg = 0.0;
    bool unbounded = false;  // objective climbs without bound on an unbounded domain
};

// sup_y (x y - f(y)) over dom f: coarse grid scan, then golden-section
// refinement around the best node. Open endpoints are evaluated with an
// inset of 1e-9 (the continuous-extension limit); unbounded domains are
// expanded geometrically and reported unbounded (+inf) if the objective
// keeps climbing past the expansion cap.
ExtremumResult legendre(const ScalarFunctionOnInterval& f, double x);

// v*(x) = inf_{y in (1/b, 1)} (x y + v(y)) with v(y) = ln psi(1/y),
// evaluated over the closure of the y-interval.
ExtremumResult co_transform(const PsiFunction& psi, double x);

// Classical conjugate of nu_psi(p) = p ln psi(p) over p in [1, b).
ExtremumResult nu_star(const PsiFunction& psi, double x);

// Exponential Young function generated by psi:
//   N(u) = exp(nu*(ln |u|))        for |u| >= e
//   N(u) = C u^2, C e^2 = exp(nu*(1))  for |u| < e
// Requires nu_psi numerically convex on its domain; throws otherwise.
YoungFunction orlicz_from_psi(const PsiFunction& psi);

// Shared optimizer used by the transforms (exposed for reuse and testing):
// maximize fn over the closed interval [lo, hi].
ExtremumResult maximize_on_interval(const std::function<double(double)>& fn,
                                    double lo, double hi,
                                    std::size_t coarse_nodes = 513,
                                    double refine_width = 1e-10);

}  // namespace entropic
