// SPDX-License-Identifier: Apache-2.0
#include "entropic/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "entropic/gls.hpp"
#include "entropic/quadrature.hpp"

namespace entropic {

// ============================================================================
// Zeta machinery
// ============================================================================

double zeta_tail(double s, std::uint64_t n) {
    if (!(s > 1.0)) throw std::invalid_argument("zeta_tail: needs s > 1");
    if (n == 0) throw std::invalid_argument("zeta_tail: n must be >= 1");
    const std::uint64_t pivot = std::max<std::uint64_t>(n, 64);
    double acc = 0.0;
    for (std::uint64_t m = n; m < pivot; ++m)
        acc += std::pow(static_cast<double>(m), -s);
    // Euler-Maclaurin remainder from the pivot.
    const double a = static_cast<double>(pivot);
    const double a_s = std::pow(a, -s);
    acc += a * a_s / (s - 1.0);          // integral term a^(1-s)/(s-1)
    acc += 0.5 * a_s;
    acc += s * a_s / (12.0 * a);
    acc -= s * (s + 1.0) * (s + 2.0) * a_s / (720.0 * a * a * a);
    acc += s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * a_s /
           (30240.0 * a * a * a * a * a);
    return acc;
}

double riemann_zeta(double s) { return zeta_tail(s, 1); }

double partial_power_sum(double s, std::uint64_t m) {
    if (!(s > -1.0)) throw std::invalid_argument("partial_power_sum: needs s > -1");
    if (m == 0) return 0.0;
    const std::uint64_t direct = std::min<std::uint64_t>(m, 1u << 20);
    double acc = 0.0;
    for (std::uint64_t n = 1; n <= direct; ++n)
        acc += std::pow(static_cast<double>(n), s);
    if (direct == m) return acc;
    // Euler-Maclaurin over [direct+1, m] anchored at a = direct.
    const double a = static_cast<double>(direct);
    const double b = static_cast<double>(m);
    const double fa = std::pow(a, s);
    const double fb = std::pow(b, s);
    double sum = (std::pow(b, s + 1.0) - std::pow(a, s + 1.0)) / (s + 1.0);
    sum += 0.5 * (fa + fb);
    sum += s * (std::pow(b, s - 1.0) - std::pow(a, s - 1.0)) / 12.0;
    sum -= s * (s - 1.0) * (s - 2.0) *
           (std::pow(b, s - 3.0) - std::pow(a, s - 3.0)) / 720.0;
    return acc - fa + sum;  // a was counted in both pieces
}

// ============================================================================
// Model construction
// ============================================================================

CounterexampleModel CounterexampleModel::build(const Config& config) {
    if (!(config.beta > 0.0))
        throw std::invalid_argument("counterexample: beta must be > 0");
    if (config.truncation < 2)
        throw std::invalid_argument("counterexample: truncation must be >= 2");
    if (!config.custom_base && !(config.gamma > 0.0 && config.gamma < 1.0 / 6.0))
        throw std::invalid_argument(
            "counterexample: base exponent must lie in (0, 1/6) so f stays in L_6");

    CounterexampleModel m;
    m.beta_ = config.beta;
    m.n_points_ = config.truncation;
    m.gamma_ = config.gamma;
    m.custom_base_ = config.custom_base;
    if (m.custom_base_) {
        // The base must at least be 6-integrable on (0,1).
        const LpDensityResult l6 = lp_norm_density(m.custom_base_, 6.0);
        if (!l6.converged)
            throw std::invalid_argument(
                "counterexample: custom base is not in L_6 (" + l6.note + ")");
    }

    const double s = 4.0 * m.beta_ + 1.0;
    m.c_beta_ = 1.0 / riemann_zeta(s);

    // a_n backward from the zeta tail keeps the decreasing chain exact.
    const std::size_t n1 = m.n_points_ + 1;
    m.a_.assign(n1 + 1, 0.0);
    m.a_[n1] = m.c_beta_ * zeta_tail(s, n1);
    for (std::size_t n = n1; n-- > 1;)
        m.a_[n] = m.a_[n + 1] + m.delta(n);
    return m;
}

double CounterexampleModel::coeff(std::uint64_t n) const {
    return std::pow(static_cast<double>(n), beta_);
}

double CounterexampleModel::delta(std::uint64_t n) const {
    return c_beta_ * std::pow(static_cast<double>(n), -4.0 * beta_ - 1.0);
}

double CounterexampleModel::a(std::uint64_t n) const {
    if (n == 0) throw std::invalid_argument("a_n: n must be >= 1");
    if (n < a_.size()) return a_[n];
    return c_beta_ * zeta_tail(4.0 * beta_ + 1.0, n);
}

double CounterexampleModel::base(double t) const {
    if (custom_base_) return custom_base_(t);
    return std::pow(t, -gamma_);
}

double CounterexampleModel::base_moment(double p) const {
    if (!(p >= 1.0)) throw std::invalid_argument("base_moment: p must be >= 1");
    if (custom_base_) return lp_norm_density(custom_base_, p).value;
    const double gp = gamma_ * p;
    if (gp >= 1.0) return kInf;
    return std::pow(1.0 / (1.0 - gp), 1.0 / p);
}

double CounterexampleModel::component(std::uint64_t n, double x) const {
    if (n == 0 || n + 1 >= a_.size()) return 0.0;
    const double lo = a_[n + 1];
    const double hi = a_[n];
    if (!(x > lo && x < hi)) return 0.0;
    return coeff(n) * base((x - lo) / (hi - lo));
}

std::uint64_t CounterexampleModel::active_index(double x) const {
    if (!(x > 0.0 && x < 1.0)) return 0;
    if (x <= a_[n_points_ + 1]) return 0;  // below the truncated chain
    // a_ decreases; find n with a_{n+1} < x <= a_n.
    std::uint64_t lo = 1, hi = n_points_;
    while (lo < hi) {
        const std::uint64_t mid = (lo + hi + 1) / 2;
        if (x <= a_[mid])
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

double CounterexampleModel::sum_value(double x) const {
    const std::uint64_t n = active_index(x);
    return n == 0 ? 0.0 : component(n, x);
}

// ============================================================================
// Moment identities
// ============================================================================

double CounterexampleModel::moment_pow(std::uint64_t n, double p) const {
    if (n == 0) throw std::invalid_argument("moment_pow: n must be >= 1");
    if (!(p >= 1.0 && p <= 4.0 + 1e-12))
        throw std::invalid_argument("moment_pow: p must lie in [1, 4]");
    const double nu = base_moment(p);
    return c_beta_ * std::pow(static_cast<double>(n), p * beta_ - 4.0 * beta_ - 1.0) *
           std::pow(nu, p);
}

double CounterexampleModel::moment(std::uint64_t n, double p) const {
    return std::pow(moment_pow(n, p), 1.0 / p);
}

double CounterexampleModel::sup_moment_pow(double p) const {
    if (!(p >= 1.0 && p < 4.0))
        throw std::invalid_argument("sup_moment_pow: p must lie in [1, 4)");
    const double nu = base_moment(p);
    const double s = 1.0 + (4.0 - p) * beta_;
    return c_beta_ * std::pow(nu, p) * riemann_zeta(s);
}

double CounterexampleModel::sup_moment(double p) const {
    return std::pow(sup_moment_pow(p), 1.0 / p);
}

double CounterexampleModel::compensated_sup_moment(double p) const {
    return std::pow(4.0 - p, 0.25) * sup_moment(p);
}

double CounterexampleModel::c1() const {
    return c_beta_ * std::pow(base_moment(4.0), 4.0) / beta_;
}

double CounterexampleModel::c2() const { return std::pow(c1(), 0.25); }

// ============================================================================
// Exact tail law
// ============================================================================

namespace {

// Level-set table for a custom base: graded grid over (0,1), cells sorted by
// the base value so that measure{f > v} is one binary search.
struct LevelSetTable {
    std::vector<double> values;   // sorted ascending
    std::vector<double> weights;  // suffix mass above each value

    explicit LevelSetTable(const std::function<double(double)>& f) {
        std::vector<std::pair<double, double>> cells;
        const int levels = 52;
        const int per_panel = 512;
        for (int k = 1; k <= levels; ++k) {
            const double hi = std::ldexp(1.0, -k);
            const double lo = hi * 0.5;
            for (int side = 0; side < 2; ++side) {
                const double base_lo = side == 0 ? lo : 1.0 - hi;
                const double w = (hi - lo) / per_panel;
                for (int i = 0; i < per_panel; ++i) {
                    const double t = base_lo + w * (i + 0.5);
                    cells.emplace_back(std::abs(f(t)), w);
                }
            }
        }
        std::sort(cells.begin(), cells.end());
        values.resize(cells.size());
        weights.resize(cells.size());
        double suffix = 0.0;
        for (std::size_t i = cells.size(); i-- > 0;) {
            suffix += cells[i].second;
            values[i] = cells[i].first;
            weights[i] = suffix;
        }
    }

    double measure_above(double v) const {
        const auto it = std::upper_bound(values.begin(), values.end(), v);
        if (it == values.end()) return 0.0;
        return weights[static_cast<std::size_t>(it - values.begin())];
    }
};

}  // namespace

double CounterexampleModel::exact_tail(double u) const {
    if (!(u > 0.0)) return 1.0;
    if (custom_base_) {
        // Numeric level-set fallback; terms with measure ~ 1 collapse into
        // the remaining chain mass.
        static thread_local const CounterexampleModel* cached_model = nullptr;
        static thread_local std::unique_ptr<LevelSetTable> table;
        if (cached_model != this) {
            table = std::make_unique<LevelSetTable>(custom_base_);
            cached_model = this;
        }
        double acc = 0.0;
        const std::uint64_t cap = 10000000;
        for (std::uint64_t n = 1; n <= cap; ++n) {
            const double frac = table->measure_above(u / coeff(n));
            if (frac >= 1.0 - 1e-12) {
                acc += a(n);  // every later component clears u as well
                return clamp01(acc);
            }
            acc += delta(n) * frac;
            if (n > 64 && delta(n) < 1e-16 * std::max(acc, 1e-300)) break;
        }
        return clamp01(acc);
    }
    // Power base: P(c_n f(U) > u) = min(1, (c_n/u)^(1/gamma)). Components
    // with c_n >= u carry their full mass; the rest form a finite power sum.
    const double inv_gamma = 1.0 / gamma_;
    double threshold = std::pow(u, 1.0 / beta_);
    if (!(threshold > 1.0)) threshold = 1.0;
    threshold = std::min(threshold, 1e15);
    std::uint64_t m = static_cast<std::uint64_t>(std::ceil(threshold));
    if (m > 1 && std::pow(static_cast<double>(m - 1), beta_) >= u) --m;
    double acc = a(m);
    if (m > 1) {
        // Exponent of the sub-threshold terms; gamma < 1/6 keeps it > -1.
        const double s = beta_ * inv_gamma - 4.0 * beta_ - 1.0;
        acc += c_beta_ * std::pow(u, -inv_gamma) * partial_power_sum(s, m - 1);
    }
    return clamp01(acc);
}

TailBoundCurve CounterexampleModel::exact_tail_curve(
    std::span<const double> u_grid) const {
    TailBoundCurve curve;
    curve.provenance = Provenance::Empirical;
    curve.u.assign(u_grid.begin(), u_grid.end());
    curve.value.resize(curve.u.size());
    for (std::size_t i = 0; i < curve.u.size(); ++i)
        curve.value[i] = exact_tail(curve.u[i]);
    return curve;
}

// ============================================================================
// Index space and field adapters
// ============================================================================

FiniteIndexSpace CounterexampleModel::source_space() const {
    const std::size_t n = n_points_ + 1;  // indices 1..N plus the limit point
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i + 1 < n; ++i) labels[i] = std::to_string(i + 1);
    labels.back() = "inf";
    std::vector<double> dist(n * n, 0.0);
    const auto inv = [&](std::size_t i) {
        return i + 1 < n ? 1.0 / static_cast<double>(i + 1) : 0.0;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            dist[i * n + j] = std::abs(inv(i) - inv(j));
    return FiniteIndexSpace(std::move(labels), std::move(dist));
}

namespace {

class CounterexampleField final : public FieldModel {
public:
    CounterexampleField(CounterexampleModel model, bool symmetrized)
        : model_(std::move(model)), symmetrized_(symmetrized) {
        const std::size_t n = model_.truncation() + 1;
        labels_.resize(n);
        for (std::size_t i = 0; i + 1 < n; ++i) labels_[i] = std::to_string(i + 1);
        labels_.back() = "inf";
    }

    std::size_t size() const override { return labels_.size(); }
    const std::vector<std::string>& labels() const override { return labels_; }

    double moment(std::size_t t, double p) const override {
        if (t + 1 == labels_.size()) return 0.0;  // the limit point
        return model_.moment(t + 1, p);
    }

    double pair_moment(std::size_t t, std::size_t s, double p) const override {
        if (t == s) return 0.0;
        // Components are pairwise disjoint (signs included), so the p-th
        // powers add.
        double acc = 0.0;
        if (t + 1 != labels_.size()) acc += model_.moment_pow(t + 1, p);
        if (s + 1 != labels_.size()) acc += model_.moment_pow(s + 1, p);
        return std::pow(acc, 1.0 / p);
    }

    void sample_path(Rng& rng, std::span<double> out) const override {
        for (double& v : out) v = 0.0;
        const double x = rng.next_uniform();
        const double sign = symmetrized_ ? rng.next_sign() : 1.0;
        const std::uint64_t n = model_.active_index(x);
        if (n != 0) out[n - 1] = sign * model_.component(n, x);
    }

    double b_max() const override { return 4.0; }

    std::string describe() const override {
        std::ostringstream os;
        os << (symmetrized_ ? "symmetrized " : "") << "disjoint-peaks process, beta="
           << model_.beta() << ", N=" << model_.truncation();
        return os.str();
    }

private:
    CounterexampleModel model_;
    bool symmetrized_;
    std::vector<std::string> labels_;
};

}  // namespace

std::unique_ptr<FieldModel> CounterexampleModel::field() const {
    return std::make_unique<CounterexampleField>(*this, false);
}

std::unique_ptr<FieldModel> CounterexampleModel::symmetrized_field() const {
    return std::make_unique<CounterexampleField>(*this, true);
}

}  // namespace entropic
