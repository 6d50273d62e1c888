// SPDX-License-Identifier: Apache-2.0
#include "entropic/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "entropic/conjugate.hpp"

namespace entropic {

const char* provenance_tag(Provenance p) {
    switch (p) {
        case Provenance::EntropyBound: return "eq1.16";
        case Provenance::PartitionSeries: return "eq3.9";
        case Provenance::FittedTail: return "eq4.6";
        case Provenance::Empirical: return "empirical";
    }
    return "empirical";
}

Provenance parse_provenance(const std::string& tag) {
    if (tag == "eq1.16") return Provenance::EntropyBound;
    if (tag == "eq3.9") return Provenance::PartitionSeries;
    if (tag == "eq4.6") return Provenance::FittedTail;
    if (tag == "empirical") return Provenance::Empirical;
    throw std::invalid_argument("unknown provenance tag '" + tag + "'");
}

void TailBoundCurve::check_invariants(double tol) const {
    if (u.size() != value.size())
        throw std::logic_error("tail curve: grid/value size mismatch");
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!(u[i] > 0.0)) throw std::logic_error("tail curve: u must be positive");
        if (i > 0 && !(u[i] > u[i - 1]))
            throw std::logic_error("tail curve: u must be increasing");
        if (value[i] < -tol || value[i] > 1.0 + tol)
            throw std::logic_error("tail curve: value outside [0,1]");
        if (i > 0 && value[i] > value[i - 1] + tol)
            throw std::logic_error("tail curve: values must be nonincreasing");
    }
}

double TailBoundCurve::at(double u_query) const {
    if (u.empty()) return 1.0;
    if (u_query < u.front()) return 1.0;
    auto it = std::upper_bound(u.begin(), u.end(), u_query);
    const std::size_t j = static_cast<std::size_t>(it - u.begin());
    return value[j - 1];
}

// ============================================================================
// Entropy integral
// ============================================================================

ThetaEvaluator::ThetaEvaluator(const FiniteIndexSpace& space, const PsiFunction& psi,
                               double prefactor)
    : prefactor_(prefactor) {
    diameter_ = space.diameter();
    if (diameter_ <= 0.0) return;  // one-point or a.s. identical: Theta = 0

    const std::vector<double> steps = space.distance_steps();
    const double ln2 = 0.6931471805599453094172321214582;

    std::vector<double> bounds;
    bounds.push_back(0.0);
    for (double s : steps) bounds.push_back(s);

    for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
        // H is constant on [bounds[k], bounds[k+1]); sample it mid-segment
        // for the first piece (eps -> 0 limit) and at the left step after.
        const double eps = k == 0 ? 0.5 * bounds[1] : bounds[k];
        const EntropyResult h = metric_entropy(space, eps);
        const ExtremumResult vstar = co_transform(psi, ln2 + h.h);
        Segment seg;
        seg.lo = bounds[k];
        seg.hi = bounds[k + 1];
        seg.entropy = h.h;
        seg.weight = is_finite(vstar.value) ? std::exp(vstar.value) : kInf;
        seg.exact = h.exact;
        if (!is_finite(seg.weight)) finite_ = false;
        segments_.push_back(seg);
    }
}

double ThetaEvaluator::theta(double delta) const {
    if (!(delta >= 0.0)) throw std::invalid_argument("theta: delta must be >= 0");
    if (delta == 0.0 || segments_.empty()) return 0.0;
    const double d = std::min(delta, diameter_);
    double acc = 0.0;
    for (const Segment& seg : segments_) {
        if (seg.lo >= d) break;
        const double width = std::min(seg.hi, d) - seg.lo;
        if (!is_finite(seg.weight)) return kInf;
        acc += width * seg.weight;
    }
    return prefactor_ * acc;
}

double entropy_integral(const FiniteIndexSpace& space, const PsiFunction& psi,
                        double delta, double prefactor) {
    return ThetaEvaluator(space, psi, prefactor).theta(delta);
}

// ============================================================================
// Sup-tail bound
// ============================================================================

SupTailResult sup_tail_bound(const FiniteIndexSpace& space, const PsiFunction& psi,
                             std::span<const double> u_grid, double anchor,
                             double prefactor) {
    if (u_grid.empty()) throw std::invalid_argument("sup_tail_bound: empty u-grid");
    SupTailResult out;
    const ThetaEvaluator theta(space, psi, prefactor);
    out.theta = theta.theta(theta.diameter());
    out.theta_finite = is_finite(out.theta);
    out.curve.u.assign(u_grid.begin(), u_grid.end());
    out.curve.provenance = Provenance::EntropyBound;

    if (!out.theta_finite) {
        out.z = kInf;
        out.norm_bound = kInf;
        out.curve.value.assign(u_grid.size(), 1.0);
        out.curve.diagnostic = "entropy integral diverges";
        return out;
    }
    out.z = std::max(out.theta, anchor);
    out.norm_bound = out.z;
    out.curve.value.resize(u_grid.size());
    for (std::size_t i = 0; i < u_grid.size(); ++i) {
        const double u = u_grid[i];
        if (!(u > 0.0)) throw std::invalid_argument("sup_tail_bound: u must be > 0");
        const ExtremumResult ns = nu_star(psi, std::log(u / out.z));
        const double exponent = ns.unbounded ? kInf : ns.value;
        out.curve.value[i] = clamp01(std::exp(-exponent));
    }
    return out;
}

double modulus_bound(const FiniteIndexSpace& space, const PsiFunction& psi,
                     double delta, double prefactor) {
    return entropy_integral(space, psi, delta, prefactor);
}

}  // namespace entropic
