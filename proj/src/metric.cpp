// SPDX-License-Identifier: Apache-2.0
#include "entropic/metric.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "entropic/field.hpp"
#include "entropic/gls.hpp"

namespace entropic {

FiniteIndexSpace::FiniteIndexSpace(std::vector<std::string> labels,
                                   std::vector<double> dist)
    : labels_(std::move(labels)), dist_(std::move(dist)) {
    if (labels_.empty())
        throw std::invalid_argument("index space: need at least one point");
    if (dist_.size() != labels_.size() * labels_.size())
        throw std::invalid_argument("index space: distance matrix must be n x n");
}

double FiniteIndexSpace::diameter() const {
    double d = 0.0;
    for (double v : dist_) d = std::max(d, v);
    return d;
}

std::vector<double> FiniteIndexSpace::distance_steps() const {
    std::vector<double> steps;
    const std::size_t n = size();
    steps.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (dist(i, j) > 0.0) steps.push_back(dist(i, j));
    std::sort(steps.begin(), steps.end());
    steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
    return steps;
}

void FiniteIndexSpace::write_csv(std::ostream& os) const {
    os << "label";
    for (const auto& l : labels_) os << ',' << l;
    os << '\n';
    char buf[64];
    for (std::size_t i = 0; i < size(); ++i) {
        os << labels_[i];
        for (std::size_t j = 0; j < size(); ++j) {
            std::snprintf(buf, sizeof buf, ",%.17g", dist(i, j));
            os << buf;
        }
        os << '\n';
    }
}

FiniteIndexSpace FiniteIndexSpace::read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw std::invalid_argument("space csv: empty input");
    std::vector<std::string> labels;
    {
        std::stringstream header(line);
        std::string cell;
        bool first = true;
        while (std::getline(header, cell, ',')) {
            if (first) {
                first = false;  // corner cell
                continue;
            }
            labels.push_back(cell);
        }
    }
    if (labels.empty()) throw std::invalid_argument("space csv: no labels");
    const std::size_t n = labels.size();
    std::vector<double> dist(n * n, 0.0);
    std::size_t row = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (row >= n) throw std::invalid_argument("space csv: too many rows");
        std::stringstream ss(line);
        std::string cell;
        std::getline(ss, cell, ',');  // row label
        for (std::size_t j = 0; j < n; ++j) {
            if (!std::getline(ss, cell, ','))
                throw std::invalid_argument("space csv: short row " + std::to_string(row));
            dist[row * n + j] = std::stod(cell);
        }
        ++row;
    }
    if (row != n) throw std::invalid_argument("space csv: missing rows");
    return FiniteIndexSpace(std::move(labels), std::move(dist));
}

std::string MetricViolation::describe(const FiniteIndexSpace& space) const {
    std::ostringstream os;
    const auto& l = space.labels();
    switch (kind) {
        case Kind::NegativeEntry:
            os << "negative distance at (" << l[i] << "," << l[j] << ")";
            break;
        case Kind::NonzeroDiagonal:
            os << "nonzero diagonal at " << l[i];
            break;
        case Kind::Asymmetry:
            os << "asymmetry between (" << l[i] << "," << l[j] << ")";
            break;
        case Kind::Triangle:
            os << "triangle violation d(" << l[i] << "," << l[k] << ") > d("
               << l[i] << "," << l[j] << ") + d(" << l[j] << "," << l[k]
               << ") by " << magnitude;
            break;
    }
    return os.str();
}

ValidationReport validate_semi_metric(const FiniteIndexSpace& space) {
    ValidationReport report;
    const std::size_t n = space.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(space.dist(i, i)) > 0.0)
            report.violations.push_back(
                {MetricViolation::Kind::NonzeroDiagonal, i, i, 0, space.dist(i, i)});
        for (std::size_t j = 0; j < n; ++j) {
            if (space.dist(i, j) < 0.0)
                report.violations.push_back(
                    {MetricViolation::Kind::NegativeEntry, i, j, 0, space.dist(i, j)});
            if (j > i && space.dist(i, j) != space.dist(j, i))
                report.violations.push_back(
                    {MetricViolation::Kind::Asymmetry, i, j, 0,
                     space.dist(i, j) - space.dist(j, i)});
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const double slack =
                    space.dist(i, k) - space.dist(i, j) - space.dist(j, k);
                if (slack > kMetricTol)
                    report.violations.push_back(
                        {MetricViolation::Kind::Triangle, i, j, k, slack});
            }
    report.valid = report.violations.empty();
    return report;
}

// ============================================================================
// Covering numbers
// ============================================================================

namespace {

std::vector<std::uint64_t> ball_masks(const FiniteIndexSpace& space, double eps) {
    const std::size_t n = space.size();
    std::vector<std::uint64_t> balls(n, 0);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t j = 0; j < n; ++j)
            if (space.dist(c, j) <= eps) balls[c] |= (1ULL << j);
    return balls;
}

struct CoverSearch {
    const std::vector<std::uint64_t>& balls;
    std::uint64_t universe;
    std::size_t best;
    std::vector<std::size_t> best_centers;
    std::vector<std::size_t> stack;

    void run(std::uint64_t uncovered, std::size_t used) {
        if (uncovered == 0) {
            if (used < best) {
                best = used;
                best_centers = stack;
            }
            return;
        }
        if (used + 1 >= best) return;  // covering needs at least one more ball
        // Branch on the uncovered point with the fewest candidate balls.
        std::size_t pick = 64;
        std::size_t pick_count = SIZE_MAX;
        std::uint64_t rest = uncovered;
        while (rest) {
            const std::size_t e = static_cast<std::size_t>(std::countr_zero(rest));
            rest &= rest - 1;
            std::size_t cnt = 0;
            for (std::size_t c = 0; c < balls.size(); ++c)
                if (balls[c] & (1ULL << e)) ++cnt;
            if (cnt < pick_count) {
                pick_count = cnt;
                pick = e;
            }
        }
        // Try each ball covering the pick, largest marginal coverage first.
        std::vector<std::pair<int, std::size_t>> candidates;
        for (std::size_t c = 0; c < balls.size(); ++c)
            if (balls[c] & (1ULL << pick))
                candidates.emplace_back(
                    -std::popcount(balls[c] & uncovered), c);
        std::sort(candidates.begin(), candidates.end());
        for (const auto& [neg_gain, c] : candidates) {
            stack.push_back(c);
            run(uncovered & ~balls[c], used + 1);
            stack.pop_back();
        }
    }
};

std::vector<std::size_t> greedy_cover(const FiniteIndexSpace& space, double eps) {
    const std::size_t n = space.size();
    std::vector<char> covered(n, 0);
    std::vector<std::size_t> centers;
    std::size_t remaining = n;
    while (remaining > 0) {
        std::size_t best_c = 0;
        std::size_t best_gain = 0;
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t gain = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (!covered[j] && space.dist(c, j) <= eps) ++gain;
            if (gain > best_gain) {  // ties resolve to the lowest index
                best_gain = gain;
                best_c = c;
            }
        }
        centers.push_back(best_c);
        for (std::size_t j = 0; j < n; ++j)
            if (!covered[j] && space.dist(best_c, j) <= eps) {
                covered[j] = 1;
                --remaining;
            }
    }
    return centers;
}

std::vector<std::size_t> exact_cover(const FiniteIndexSpace& space, double eps) {
    const std::size_t n = space.size();
    const std::vector<std::uint64_t> balls = ball_masks(space, eps);
    const std::uint64_t universe =
        n == 64 ? ~0ULL : ((1ULL << n) - 1);
    const std::vector<std::size_t> greedy = greedy_cover(space, eps);
    CoverSearch search{balls, universe, greedy.size(), greedy, {}};
    search.run(universe, 0);
    return search.best_centers;
}

}  // namespace

EntropyResult metric_entropy_greedy(const FiniteIndexSpace& space, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("metric_entropy: eps must be > 0");
    const auto centers = greedy_cover(space, eps);
    return {std::log(static_cast<double>(centers.size())), centers.size(), false};
}

EntropyResult metric_entropy(const FiniteIndexSpace& space, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("metric_entropy: eps must be > 0");
    if (space.size() <= 64) {
        const auto centers = exact_cover(space, eps);
        return {std::log(static_cast<double>(centers.size())), centers.size(), true};
    }
    return metric_entropy_greedy(space, eps);
}

std::vector<std::size_t> covering_centers(const FiniteIndexSpace& space, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("covering: eps must be > 0");
    return space.size() <= 64 ? exact_cover(space, eps) : greedy_cover(space, eps);
}

std::vector<EntropyProfileRow> entropy_profile(const FiniteIndexSpace& space) {
    std::vector<EntropyProfileRow> rows;
    const std::vector<double> steps = space.distance_steps();
    if (steps.empty()) {
        rows.push_back({0.0, 0.0, true});
        return rows;
    }
    // One row just below the first step (every zero-class needs its own
    // ball), then one per step.
    const double eps0 = steps.front() * 0.5;
    EntropyResult r0 = metric_entropy(space, eps0);
    rows.push_back({eps0, r0.h, r0.exact});
    for (double eps : steps) {
        const EntropyResult r = metric_entropy(space, eps);
        rows.push_back({eps, r.h, r.exact});
    }
    return rows;
}

FiniteIndexSpace natural_distance(const FieldModel& field, const PsiFunction& psi,
                                  std::span<const double> p_grid) {
    const std::size_t n = field.size();
    std::vector<double> dist(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const MomentOracle pair = [&field, i, j](double p) {
                return field.pair_moment(i, j, p);
            };
            const double d = gls_norm(pair, psi, p_grid).value;
            dist[i * n + j] = d;
            dist[j * n + i] = d;
        }
    }
    return FiniteIndexSpace(field.labels(), std::move(dist));
}

FiniteIndexSpace natural_distance(const FieldModel& field, const PsiFunction& psi) {
    const std::vector<double> grid = psi.default_p_grid();
    return natural_distance(field, psi, grid);
}

}  // namespace entropic
