// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "entropic/common.hpp"
#include "entropic/psi.hpp"

namespace entropic {

class FieldModel;

// p -> |eta|_p for one random quantity. Nondecreasing in p on a probability
// space; +inf where the moment diverges.
using MomentOracle = std::function<double(double)>;

// ============================================================================
// Lebesgue-Riesz norms
// ============================================================================

// (mean |x|^p)^(1/p) over a sample array.
double lp_norm(std::span<const double> samples, double p);

struct LpDensityResult {
    double value = 0.0;
    bool converged = true;
    std::string note;
};

// (integral over (0,1) of |f|^p)^(1/p) by adaptive quadrature. A divergent
// integral reports converged=false and value=+inf.
LpDensityResult lp_norm_density(const std::function<double(double)>& f, double p,
                                double magnitude_ceiling = 1e30);

// Convenience: density norm as a plain value (+inf on divergence).
double lp_norm(const std::function<double(double)>& density_on_unit, double p);

MomentOracle moment_oracle_from_samples(std::vector<double> samples);
MomentOracle moment_oracle_from_density(std::function<double(double)> f);
// |N(0,sigma^2)|_p = sigma * 2^(1/2) * (Gamma((p+1)/2)/sqrt(pi))^(1/p).
MomentOracle moment_oracle_gaussian(double sigma);
double gaussian_abs_moment(double p);  // |N(0,1)|_p

// ============================================================================
// Grand Lebesgue norm
// ============================================================================

struct GlsNormResult {
    double value = 0.0;
    double maximizer_p = 1.0;   // grid node attaining the sup
    bool all_infinite = false;  // no grid node had a finite moment
};

// sup over the p-grid of |eta|_p / psi(p). Nodes where psi = +inf contribute
// zero unless the moment is itself infinite there.
GlsNormResult gls_norm(const MomentOracle& moments, const PsiFunction& psi,
                       std::span<const double> p_grid);
GlsNormResult gls_norm(const MomentOracle& moments, const PsiFunction& psi);

// Natural generating function of a field: psi(p) = sup_t |xi(t)|_p tabulated
// on the grid. Throws if no grid point > 1 has a finite sup.
PsiFunction natural_psi(const FieldModel& field, std::span<const double> p_grid);

// ============================================================================
// Luxemburg (Orlicz) norm
// ============================================================================

// Young function: even, convex, increasing on [0,inf), Phi(0)=0. Evaluated
// on |u| by construction.
struct YoungFunction {
    std::function<double(double)> eval;  // defined for u >= 0
    std::string name;

    double operator()(double u) const { return eval(std::abs(u)); }
};

YoungFunction young_power(double p);  // Phi(u) = u^p

// Numeric sanity check of the Young axioms on a grid; throws on violation.
void validate_young(const YoungFunction& phi);

// inf{k > 0 : E Phi(|eta|/k) <= 1} by bisection on k. `expectation` maps k to
// E Phi(|eta|/k) and must be nonincreasing in k. Returns 0 for an a.s. zero
// input and +inf when no k brings the expectation below 1.
double luxemburg_norm_from_expectation(
    const std::function<double(double)>& expectation, double rel_tol = 1e-8);

double luxemburg_norm(std::span<const double> samples, const YoungFunction& phi,
                      double rel_tol = 1e-8);
double luxemburg_norm(const std::function<double(double)>& density_on_unit,
                      const YoungFunction& phi, double rel_tol = 1e-8);

}  // namespace entropic
