// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "entropic/common.hpp"
#include "entropic/psi.hpp"

namespace entropic {

class FieldModel;

// Finite index set with a symmetric semi-distance matrix. d(t,s) = 0 for
// t != s is allowed; the triangle inequality is required up to kMetricTol.
class FiniteIndexSpace {
public:
    FiniteIndexSpace(std::vector<std::string> labels, std::vector<double> dist);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    double dist(std::size_t i, std::size_t j) const {
        return dist_[i * labels_.size() + j];
    }
    const std::vector<double>& dist_matrix() const { return dist_; }

    double diameter() const;

    // Sorted distinct positive distances (the entropy step locations).
    std::vector<double> distance_steps() const;

    void write_csv(std::ostream& os) const;
    static FiniteIndexSpace read_csv(std::istream& is);

private:
    std::vector<std::string> labels_;
    std::vector<double> dist_;  // row-major size*size
};

struct MetricViolation {
    enum class Kind { NegativeEntry, NonzeroDiagonal, Asymmetry, Triangle };
    Kind kind;
    std::size_t i = 0, j = 0, k = 0;
    double magnitude = 0.0;
    std::string describe(const FiniteIndexSpace& space) const;
};

struct ValidationReport {
    bool valid = true;
    std::vector<MetricViolation> violations;
};

ValidationReport validate_semi_metric(const FiniteIndexSpace& space);

// Metric entropy H = ln N(eps), N(eps) the minimal number of closed eps-balls
// centered in the space that cover it. Exact (branch and bound over the set
// cover) for |T| <= 64; greedy upper bound above, flagged approximate.
struct EntropyResult {
    double h = 0.0;
    std::size_t n_balls = 1;
    bool exact = true;
};

EntropyResult metric_entropy(const FiniteIndexSpace& space, double eps);

// Greedy cover regardless of size (used as the >64 fallback and for the
// exact-vs-greedy cross-check).
EntropyResult metric_entropy_greedy(const FiniteIndexSpace& space, double eps);

// The ball cover itself: center indices of a minimal (exact or greedy) cover.
std::vector<std::size_t> covering_centers(const FiniteIndexSpace& space, double eps);

// Entropy profile rows (eps, H, exact) over the distance steps.
struct EntropyProfileRow {
    double eps;
    double h;
    bool exact;
};
std::vector<EntropyProfileRow> entropy_profile(const FiniteIndexSpace& space);

// Natural semi-distance of a field: dist(t,s) = || xi(t) - xi(s) ||_{G psi}
// evaluated on the p-grid.
FiniteIndexSpace natural_distance(const FieldModel& field, const PsiFunction& psi,
                                  std::span<const double> p_grid);
FiniteIndexSpace natural_distance(const FieldModel& field, const PsiFunction& psi);

}  // namespace entropic
