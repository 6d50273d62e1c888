// SPDX-License-Identifier: Apache-2.0
#include "entropic/gls.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "entropic/field.hpp"
#include "entropic/quadrature.hpp"

namespace entropic {

// ============================================================================
// Lebesgue-Riesz norms
// ============================================================================

double lp_norm(std::span<const double> samples, double p) {
    if (samples.empty()) throw std::invalid_argument("lp_norm: empty sample array");
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
    double acc = 0.0;
    for (double x : samples) acc += std::pow(std::abs(x), p);
    return std::pow(acc / static_cast<double>(samples.size()), 1.0 / p);
}

LpDensityResult lp_norm_density(const std::function<double(double)>& f, double p,
                                double magnitude_ceiling) {
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
    const auto integrand = [&](double x) { return std::pow(std::abs(f(x)), p); };
    const QuadratureResult q = integrate_unit(integrand, 1e-11, magnitude_ceiling);
    LpDensityResult r;
    if (!q.converged) {
        r.value = kInf;
        r.converged = false;
        r.note = q.note;
        return r;
    }
    r.value = std::pow(q.value, 1.0 / p);
    return r;
}

double lp_norm(const std::function<double(double)>& density_on_unit, double p) {
    return lp_norm_density(density_on_unit, p).value;
}

MomentOracle moment_oracle_from_samples(std::vector<double> samples) {
    if (samples.empty())
        throw std::invalid_argument("moment oracle: empty sample array");
    return [data = std::move(samples)](double p) {
        return lp_norm(std::span<const double>(data), p);
    };
}

MomentOracle moment_oracle_from_density(std::function<double(double)> f) {
    return [fn = std::move(f)](double p) { return lp_norm_density(fn, p).value; };
}

double gaussian_abs_moment(double p) {
    // E|N(0,1)|^p = 2^(p/2) Gamma((p+1)/2) / sqrt(pi)
    const double log_moment =
        0.5 * p * std::log(2.0) + std::lgamma(0.5 * (p + 1.0)) -
        0.5 * std::log(M_PI);
    return std::exp(log_moment / p);
}

MomentOracle moment_oracle_gaussian(double sigma) {
    return [sigma](double p) { return sigma * gaussian_abs_moment(p); };
}

// ============================================================================
// Grand Lebesgue norm
// ============================================================================

GlsNormResult gls_norm(const MomentOracle& moments, const PsiFunction& psi,
                       std::span<const double> p_grid) {
    if (p_grid.empty()) throw std::invalid_argument("gls_norm: empty p-grid");
    GlsNormResult best;
    best.value = 0.0;
    best.maximizer_p = p_grid.front();
    bool any_finite = false;
    for (double p : p_grid) {
        const double m = moments(p);
        const double s = psi(p);
        double ratio;
        if (is_inf(m)) {
            ratio = is_inf(s) ? 0.0 : kInf;  // formal extension absorbs both
        } else {
            any_finite = true;
            ratio = is_inf(s) ? 0.0 : m / s;
        }
        if (ratio > best.value) {
            best.value = ratio;
            best.maximizer_p = p;
        }
    }
    best.all_infinite = !any_finite;
    return best;
}

GlsNormResult gls_norm(const MomentOracle& moments, const PsiFunction& psi) {
    const std::vector<double> grid = psi.default_p_grid();
    return gls_norm(moments, psi, grid);
}

PsiFunction natural_psi(const FieldModel& field, std::span<const double> p_grid) {
    if (p_grid.size() < 16)
        throw std::invalid_argument("natural_psi: p-grid needs >= 16 nodes");
    std::vector<double> nodes(p_grid.begin(), p_grid.end());
    std::vector<double> values(nodes.size());
    bool any_finite_above_one = false;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        double sup = 0.0;
        for (std::size_t t = 0; t < field.size(); ++t)
            sup = std::max(sup, field.moment(t, nodes[i]));
        values[i] = sup;
        if (nodes[i] > 1.0 && is_finite(sup)) any_finite_above_one = true;
    }
    if (!any_finite_above_one)
        throw std::domain_error("natural_psi: field has no GLS home "
                                "(no p > 1 with finite sup of moments)");
    // An a.s. zero field would produce psi = 0; report it the same way.
    const double top = *std::max_element(values.begin(), values.end());
    if (!(top > 0.0))
        throw std::domain_error("natural_psi: field is a.s. zero, psi would vanish");
    // Degenerate zeros on individual nodes (possible only for exotic inputs)
    // are lifted to the smallest positive value to keep psi > 0.
    double smallest_pos = top;
    for (double v : values)
        if (v > 0.0) smallest_pos = std::min(smallest_pos, v);
    for (double& v : values)
        if (!(v > 0.0)) v = smallest_pos;
    return PsiFunction::tabulated(std::move(nodes), std::move(values), field.b_max());
}

// ============================================================================
// Luxemburg norm
// ============================================================================

YoungFunction young_power(double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("young_power: p must be >= 1");
    return YoungFunction{[p](double u) { return std::pow(u, p); },
                         "u^" + std::to_string(p)};
}

void validate_young(const YoungFunction& phi) {
    if (std::abs(phi(0.0)) > 1e-12)
        throw std::invalid_argument("young function: Phi(0) must be 0");
    double prev = 0.0;
    double prev_diff = 0.0;
    const int n = 64;
    for (int i = 1; i <= n; ++i) {
        const double u = 16.0 * static_cast<double>(i) / n;
        const double v = phi(u);
        if (phi(-u) != v)
            throw std::invalid_argument("young function: must be even");
        if (v < prev - 1e-12)
            throw std::invalid_argument("young function: must be nondecreasing");
        const double diff = v - prev;
        if (diff < prev_diff - 1e-9 * std::max(1.0, v))
            throw std::invalid_argument("young function: must be convex");
        prev = v;
        prev_diff = diff;
    }
}

double luxemburg_norm_from_expectation(
    const std::function<double(double)>& expectation, double rel_tol) {
    // E Phi(|eta|/k) is nonincreasing in k; find the smallest feasible k.
    double hi = 1.0;
    int guard = 0;
    while (!(expectation(hi) <= 1.0)) {
        hi *= 2.0;
        if (++guard > 2100) return kInf;  // no finite k works
    }
    double lo = hi * 0.5;
    guard = 0;
    while (expectation(lo) <= 1.0) {
        hi = lo;
        lo *= 0.5;
        if (++guard > 2100) return 0.0;  // a.s. zero input
    }
    // Invariant: E(hi) <= 1 < E(lo).
    while ((hi - lo) > rel_tol * hi) {
        const double mid = 0.5 * (lo + hi);
        if (expectation(mid) <= 1.0)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

double luxemburg_norm(std::span<const double> samples, const YoungFunction& phi,
                      double rel_tol) {
    if (samples.empty())
        throw std::invalid_argument("luxemburg_norm: empty sample array");
    bool all_zero = true;
    for (double x : samples)
        if (x != 0.0) { all_zero = false; break; }
    if (all_zero) return 0.0;
    const auto expectation = [&](double k) {
        double acc = 0.0;
        for (double x : samples) acc += phi(std::abs(x) / k);
        return acc / static_cast<double>(samples.size());
    };
    return luxemburg_norm_from_expectation(expectation, rel_tol);
}

double luxemburg_norm(const std::function<double(double)>& density_on_unit,
                      const YoungFunction& phi, double rel_tol) {
    const auto expectation = [&](double k) {
        const auto integrand = [&](double x) {
            return phi(std::abs(density_on_unit(x)) / k);
        };
        const QuadratureResult q = integrate_unit(integrand, 1e-10);
        return q.converged ? q.value : kInf;
    };
    return luxemburg_norm_from_expectation(expectation, rel_tol);
}

}  // namespace entropic
