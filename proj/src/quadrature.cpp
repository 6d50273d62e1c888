// SPDX-License-Identifier: Apache-2.0
#include "entropic/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace entropic {
namespace {

// 15-point Kronrod nodes/weights on [-1,1], with the embedded 7-point Gauss
// rule for the error estimate.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
    double value;
    double error;
};

PanelEstimate gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kXgk[i]);
        fv[14 - i] = f(c + h * kXgk[i]);
    }
    fv[7] = f(c);

    double result_kronrod = kWgk[7] * fv[7];
    double result_gauss = kWg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        result_kronrod += kWgk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) {
            result_gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
        }
    }
    return {result_kronrod * h, std::abs(result_kronrod - result_gauss) * h};
}

struct AdaptiveState {
    double rel_tol;
    int max_depth;
    bool ok = true;
};

double adaptive_rec(const std::function<double(double)>& f, double a, double b,
                    double scale, int depth, AdaptiveState& st) {
    const PanelEstimate e = gk15(f, a, b);
    if (!std::isfinite(e.value)) {
        st.ok = false;
        return e.value;
    }
    const double tol = st.rel_tol * std::max(scale, std::abs(e.value));
    if (e.error <= tol || depth >= st.max_depth) {
        if (e.error > tol) st.ok = false;
        return e.value;
    }
    const double m = 0.5 * (a + b);
    return adaptive_rec(f, a, m, scale, depth + 1, st) +
           adaptive_rec(f, m, b, scale, depth + 1, st);
}

}  // namespace

QuadratureResult adaptive_gk(const std::function<double(double)>& f,
                             double a, double b, double rel_tol, int max_depth) {
    if (a == b) return {0.0, true, {}};
    AdaptiveState st{rel_tol, max_depth};
    const double scale = std::abs(gk15(f, a, b).value) + 1e-300;
    const double v = adaptive_rec(f, a, b, scale, 0, st);
    QuadratureResult r;
    r.value = v;
    r.converged = st.ok && std::isfinite(v);
    if (!r.converged) r.note = "requested accuracy not reached";
    return r;
}

QuadratureResult integrate_unit(const std::function<double(double)>& f,
                                double rel_tol, double magnitude_ceiling) {
    QuadratureResult out;
    double total = 0.0;

    // Geometric panel chains toward each endpoint. A chain panel at level k
    // has width 2^-(k+1); the chain stops once its contributions are
    // negligible against the running total.
    const int kMaxLevel = 1000;
    const int kStallLimit = 60;

    auto run_chain = [&](bool toward_zero) -> bool {
        double prev_mag = std::numeric_limits<double>::max();
        int stalled = 0;
        double chain_abs = 0.0;
        for (int k = 1; k <= kMaxLevel; ++k) {
            const double hi_w = std::ldexp(1.0, -k);      // 2^-k
            const double lo_w = std::ldexp(1.0, -k - 1);  // 2^-(k+1)
            const double a = toward_zero ? lo_w : 1.0 - hi_w;
            const double b = toward_zero ? hi_w : 1.0 - lo_w;
            if (a >= b) break;
            const QuadratureResult panel = adaptive_gk(f, a, b, rel_tol, 40);
            if (!std::isfinite(panel.value)) {
                out.converged = false;
                out.note = "non-finite integrand";
                return false;
            }
            total += panel.value;
            chain_abs += std::abs(panel.value);
            if (std::abs(total) > magnitude_ceiling) {
                out.converged = false;
                out.note = "magnitude ceiling exceeded";
                return false;
            }
            const double mag = std::abs(panel.value);
            if (mag <= rel_tol * std::max(1e-300, std::abs(total)) && k > 4) {
                return true;  // chain converged
            }
            if (mag >= 0.999 * prev_mag && mag > 0.0 && k > 8) {
                if (++stalled >= kStallLimit) {
                    out.converged = false;
                    out.note = "panel contributions do not decay";
                    return false;
                }
            } else {
                stalled = 0;
            }
            prev_mag = std::max(mag, 1e-300);
        }
        // Ran out of representable levels; harmless only if the last
        // contributions had already decayed.
        return stalled == 0;
    };

    if (!run_chain(true) || !run_chain(false)) {
        out.value = std::numeric_limits<double>::infinity();
        return out;
    }
    out.value = total;
    out.converged = true;
    return out;
}

}  // namespace entropic
