// SPDX-License-Identifier: Apache-2.0
#include "entropic/conjugate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "entropic/grid.hpp"

namespace entropic {
namespace {

constexpr double kBoundaryInset = 1e-9;
constexpr double kExpansionCap = 1e12;

double safe_eval(const std::function<double(double)>& fn, double x) {
    const double v = fn(x);
    return std::isnan(v) ? -kInf : v;
}

}  // namespace

ScalarFunctionOnInterval ScalarFunctionOnInterval::closed_form(
    std::function<double(double)> f, double lo, double hi, bool right_open) {
    if (!(hi > lo)) throw std::invalid_argument("scalar function: degenerate interval");
    return {lo, hi, right_open, std::move(f)};
}

ScalarFunctionOnInterval ScalarFunctionOnInterval::tabulated(
    std::vector<double> xs, std::vector<double> ys) {
    if (xs.size() != ys.size())
        throw std::invalid_argument("scalar function: node/value count mismatch");
    if (xs.size() < 16)
        throw std::invalid_argument("scalar function: tabulated form needs >= 16 nodes");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1]))
            throw std::invalid_argument("scalar function: nodes must be strictly increasing");
    auto nodes = std::make_shared<std::pair<std::vector<double>, std::vector<double>>>(
        std::move(xs), std::move(ys));
    ScalarFunctionOnInterval f;
    f.lo = nodes->first.front();
    f.hi = nodes->first.back();
    f.right_open = false;
    f.eval = [nodes](double x) {
        const auto& px = nodes->first;
        const auto& py = nodes->second;
        if (x <= px.front()) return py.front();
        if (x >= px.back()) return py.back();
        const auto it = std::upper_bound(px.begin(), px.end(), x);
        const std::size_t j = static_cast<std::size_t>(it - px.begin());
        const double t = (x - px[j - 1]) / (px[j] - px[j - 1]);
        return py[j - 1] + t * (py[j] - py[j - 1]);
    };
    return f;
}

ExtremumResult maximize_on_interval(const std::function<double(double)>& fn,
                                    double lo, double hi,
                                    std::size_t coarse_nodes, double refine_width) {
    ExtremumResult best{-kInf, lo, false};
    if (!(hi > lo)) {
        best.value = safe_eval(fn, lo);
        best.arg = lo;
        return best;
    }
    const std::vector<double> grid = linspace(lo, hi, coarse_nodes);
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = safe_eval(fn, grid[i]);
        if (v > best.value) {
            best.value = v;
            best.arg = grid[i];
            best_i = i;
        }
    }
    // Golden-section refinement on the bracket around the best node.
    double a = grid[best_i == 0 ? 0 : best_i - 1];
    double b = grid[std::min(best_i + 1, grid.size() - 1)];
    constexpr double kGolden = 0.61803398874989484820;
    // The requested width can sit below the floating-point spacing for large
    // brackets; stop at whichever is coarser.
    const double eps_width =
        8.0 * std::numeric_limits<double>::epsilon() *
        std::max({1.0, std::abs(a), std::abs(b)});
    const double width_tol = std::max(refine_width, eps_width);
    double c = b - kGolden * (b - a);
    double d = a + kGolden * (b - a);
    double fc = safe_eval(fn, c);
    double fd = safe_eval(fn, d);
    for (int iter = 0; iter < 400 && (b - a) > width_tol; ++iter) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kGolden * (b - a);
            fc = safe_eval(fn, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kGolden * (b - a);
            fd = safe_eval(fn, d);
        }
    }
    const double mid = 0.5 * (a + b);
    const double fm = safe_eval(fn, mid);
    if (fm > best.value) {
        best.value = fm;
        best.arg = mid;
    }
    if (fc > best.value) {
        best.value = fc;
        best.arg = c;
    }
    if (fd > best.value) {
        best.value = fd;
        best.arg = d;
    }
    return best;
}

namespace {

// Maximize over [lo, inf): geometric expansion until the maximizer detaches
// from the right edge or the cap is reached.
ExtremumResult maximize_unbounded(const std::function<double(double)>& fn,
                                  double lo) {
    double hi = std::max(2.0 * std::abs(lo) + 2.0, lo + 1.0);
    ExtremumResult prev{-kInf, lo, false};
    while (hi <= kExpansionCap) {
        ExtremumResult r = maximize_on_interval(fn, lo, hi);
        const bool at_edge = r.arg > lo + 0.98 * (hi - lo);
        if (!at_edge && r.value <= prev.value + 1e-12 * std::abs(prev.value) + 1e-300) {
            return r.value >= prev.value ? r : prev;
        }
        if (!at_edge) {
            prev = r;
            // One confirming pass with a wider window.
            hi *= 4.0;
            continue;
        }
        prev = r;
        hi *= 8.0;
    }
    ExtremumResult r = prev;
    r.unbounded = true;
    r.value = kInf;
    return r;
}

}  // namespace

ExtremumResult legendre(const ScalarFunctionOnInterval& f, double x) {
    if (!f.eval) throw std::invalid_argument("legendre: function not set");
    const auto objective = [&](double y) {
        const double v = f.eval(y);
        if (is_inf(v)) return -kInf;  // formal extension contributes nothing
        return x * y - v;
    };
    if (is_inf(f.hi)) return maximize_unbounded(objective, f.lo);
    const double hi = f.right_open ? f.hi - kBoundaryInset : f.hi;
    return maximize_on_interval(objective, f.lo, hi);
}

ExtremumResult co_transform(const PsiFunction& psi, double x) {
    // Work on y in [1/b, 1] intersected with the usable p-range of psi.
    const double p_lo = psi.domain_lo();
    const double p_hi = psi.domain_hi();
    double y_lo = is_inf(p_hi) ? 0.0 : 1.0 / p_hi;
    double y_hi = 1.0 / p_lo;
    // The left end maps to p -> b (or beyond the table); evaluate the
    // continuous extension just inside.
    if (psi.right_open() || y_lo == 0.0) y_lo += kBoundaryInset;
    const auto objective = [&](double y) {
        const double psi_val = psi(1.0 / y);
        if (is_inf(psi_val)) return -kInf;
        return -(x * y + std::log(psi_val));
    };
    ExtremumResult r = maximize_on_interval(objective, y_lo, y_hi);
    r.value = -r.value;
    return r;
}

ExtremumResult nu_star(const PsiFunction& psi, double x) {
    ScalarFunctionOnInterval nu;
    nu.lo = psi.domain_lo();
    nu.hi = psi.domain_hi();
    nu.right_open = psi.right_open();
    nu.eval = [&psi](double p) { return psi.nu(p); };
    return legendre(nu, x);
}

YoungFunction orlicz_from_psi(const PsiFunction& psi) {
    // nu must be convex for the conjugate construction to invert cleanly.
    const double lo = psi.domain_lo();
    const double hi = is_inf(psi.domain_hi())
                          ? 64.0
                          : psi.domain_hi() - (psi.right_open() ? kBoundaryInset : 0.0);
    const std::vector<double> grid = linspace(lo, hi, 257);
    std::vector<double> nu_vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) nu_vals[i] = psi.nu(grid[i]);
    double scale = 1.0;
    for (double v : nu_vals)
        if (is_finite(v)) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        const double second = nu_vals[i - 1] - 2.0 * nu_vals[i] + nu_vals[i + 1];
        if (second < -1e-8 * scale)
            throw std::domain_error("orlicz_from_psi: nu_psi is not convex");
    }

    // Precompute nu* on a log-|u| grid; the Young function interpolates it.
    // The grid is dense: linear interpolation of a strongly convex nu*
    // otherwise bleeds percent-level error into exp(nu*).
    const double x_max = 220.0;  // exp(220) is past any double we will see
    const std::size_t n = 8192;
    auto table = std::make_shared<std::pair<std::vector<double>, std::vector<double>>>();
    table->first = linspace(1.0, x_max, n);
    table->second.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const ExtremumResult r = nu_star(psi, table->first[i]);
        table->second[i] = r.unbounded ? kInf : r.value;
    }
    const double nu_star_1 = table->second.front();
    const double e = 2.718281828459045235360287471353;
    const double c_quadratic = std::exp(nu_star_1) / (e * e);

    YoungFunction phi;
    phi.name = "N_psi[" + psi.describe() + "]";
    phi.eval = [table, c_quadratic, e](double u) {
        if (u < e) return c_quadratic * u * u;
        const double x = std::log(u);
        const auto& xs = table->first;
        const auto& ys = table->second;
        if (x >= xs.back()) {
            // Linear continuation with the last finite slope.
            const double slope =
                (ys[xs.size() - 1] - ys[xs.size() - 2]) / (xs[1] - xs[0]);
            return std::exp(ys.back() + slope * (x - xs.back()));
        }
        const auto it = std::upper_bound(xs.begin(), xs.end(), x);
        const std::size_t j = static_cast<std::size_t>(it - xs.begin());
        if (j == 0) return std::exp(ys.front());
        if (is_inf(ys[j - 1]) || is_inf(ys[j])) return kInf;
        const double t = (x - xs[j - 1]) / (xs[j] - xs[j - 1]);
        return std::exp(ys[j - 1] + t * (ys[j] - ys[j - 1]));
    };
    return phi;
}

}  // namespace entropic
