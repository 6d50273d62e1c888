// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <vector>

#include "entropic/common.hpp"
#include "entropic/metric.hpp"
#include "entropic/psi.hpp"

namespace entropic {

// Which estimate produced a tail curve. The serialized tags are part of the
// CSV schema and must not change.
enum class Provenance { EntropyBound, PartitionSeries, FittedTail, Empirical };
const char* provenance_tag(Provenance p);
Provenance parse_provenance(const std::string& tag);

// Grid of (u, bound) pairs. Values are clamped to [0,1] and nonincreasing
// in u once clamped.
struct TailBoundCurve {
    std::vector<double> u;
    std::vector<double> value;
    Provenance provenance = Provenance::Empirical;
    std::string diagnostic;  // nonempty when the producer degraded the curve

    void check_invariants(double tol = 1e-12) const;  // throws on violation
    double at(double u_query) const;  // step-conservative lookup (left value)
};

// Entropy integral of a space under psi. H is a step function of eps, so the
// integral is an exact finite sum of step widths times exp(v*(ln 2 + H)).
class ThetaEvaluator {
public:
    ThetaEvaluator(const FiniteIndexSpace& space, const PsiFunction& psi,
                   double prefactor = kDefaultThetaPrefactor);

    // Theta(T, d, delta); delta above the diameter is clamped to it.
    double theta(double delta) const;
    double diameter() const { return diameter_; }
    bool finite() const { return finite_; }

    struct Segment {
        double lo, hi;
        double entropy;  // H on (lo, hi)
        double weight;   // exp(v*(ln 2 + H))
        bool exact;
    };
    const std::vector<Segment>& segments() const { return segments_; }

private:
    std::vector<Segment> segments_;
    double diameter_ = 0.0;
    double prefactor_;
    bool finite_ = true;
};

double entropy_integral(const FiniteIndexSpace& space, const PsiFunction& psi,
                        double delta,
                        double prefactor = kDefaultThetaPrefactor);

// Tail bound for sup |xi(t)| from the entropy integral:
//   P(sup > u) <= exp(-nu*(ln(u / Z))),   Z = max(Theta, anchor).
// The anchor keeps one-point (and other Theta = 0) spaces from producing a
// vacuous Z = 0; under natural-psi normalization the anchor is 1.
struct SupTailResult {
    TailBoundCurve curve;
    double theta = 0.0;
    double z = 0.0;          // scale entering the exponent
    double norm_bound = 0.0; // bound on || sup |xi| ||_{G psi} (= z)
    bool theta_finite = true;
};

SupTailResult sup_tail_bound(const FiniteIndexSpace& space, const PsiFunction& psi,
                             std::span<const double> u_grid, double anchor = 1.0,
                             double prefactor = kDefaultThetaPrefactor);

// Bound on the probabilistic modulus of continuity at scale delta: the same
// entropy integral evaluated at delta.
double modulus_bound(const FiniteIndexSpace& space, const PsiFunction& psi,
                     double delta, double prefactor = kDefaultThetaPrefactor);

}  // namespace entropic
