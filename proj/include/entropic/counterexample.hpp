// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "entropic/bounds.hpp"
#include "entropic/common.hpp"
#include "entropic/field.hpp"

namespace entropic {

// Riemann zeta for s > 1 and its tail sum_{m >= n} m^-s, via Euler-Maclaurin
// (absolute error well below 1e-13 in the ranges used here).
double riemann_zeta(double s);
double zeta_tail(double s, std::uint64_t n);
// sum_{n=1}^{m} n^s for s > -1, exact for small m, Euler-Maclaurin beyond.
double partial_power_sum(double s, std::uint64_t m);

// The reference process over T = {1, 2, ..., N, inf}: disjoint scaled copies
// of a base function on a shrinking interval chain,
//   g_n(x) = c_n f((x - a_{n+1}) / delta_n) on (a_{n+1}, a_n),
// with c_n = n^beta, delta_n = C(beta) n^-(4 beta + 1), sum delta_n = 1,
// a_n the tail sums, and g at the limit point identically zero. The default
// base f(x) = x^-gamma keeps every moment and the exact tail law in closed
// form.
class CounterexampleModel {
public:
    struct Config {
        double beta = 1.0;
        std::size_t truncation = 256;  // N; the index space is {1..N, inf}
        double gamma = 0.125;          // base f(x) = x^-gamma, needs gamma < 1/6
        std::function<double(double)> custom_base;  // optional non-power base
    };

    static CounterexampleModel build(const Config& config);

    double beta() const { return beta_; }
    std::size_t truncation() const { return n_points_; }
    double gamma() const { return gamma_; }
    bool has_custom_base() const { return static_cast<bool>(custom_base_); }

    // Sequence data (n is 1-based; the series normalizer makes a_1 = 1).
    double c_beta() const { return c_beta_; }
    double coeff(std::uint64_t n) const;        // c_n = n^beta
    double delta(std::uint64_t n) const;        // C(beta) n^-(4 beta + 1)
    double a(std::uint64_t n) const;            // sum_{m >= n} delta_m
    double base_moment(double p) const;         // nu(p) = |f|_p on (0,1)

    // Pointwise evaluation.
    double base(double t) const;                // f on (0,1)
    double component(std::uint64_t n, double x) const;  // g_n(x)
    double sum_value(double x) const;           // g(x) = sum_n g_n(x)
    // Index whose support contains x (1-based); 0 when x falls below the
    // truncated chain.
    std::uint64_t active_index(double x) const;

    // Closed-form moment identities.
    double moment_pow(std::uint64_t n, double p) const;  // |g_n|_p^p
    double moment(std::uint64_t n, double p) const;      // |g_n|_p
    double sup_moment_pow(double p) const;  // |sup_n g_n|_p^p via the zeta sum
    double sup_moment(double p) const;
    double compensated_sup_moment(double p) const;  // (4-p)^(1/4) |sup|_p

    // Derived constants of the p -> 4 asymptotics.
    double c1() const;  // C(beta) nu(4)^4 / beta
    double c2() const;  // c1^(1/4)

    // Exact law P(sup_n g_n > u) of the full (untruncated) process. For the
    // power base this is the closed-form sum; a custom base falls back to a
    // high-resolution level-set measure.
    double exact_tail(double u) const;
    TailBoundCurve exact_tail_curve(std::span<const double> u_grid) const;

    // Index space of the process: d(i,j) = |1/i - 1/j|, d(i, inf) = 1/i.
    FiniteIndexSpace source_space() const;

    // Field adapters over {1..N, inf} (the last index is the limit point).
    std::unique_ptr<FieldModel> field() const;
    // Same process multiplied by independent signs drawn per path.
    std::unique_ptr<FieldModel> symmetrized_field() const;

private:
    CounterexampleModel() = default;

    double beta_ = 1.0;
    std::size_t n_points_ = 256;
    double gamma_ = 0.125;
    std::function<double(double)> custom_base_;
    double c_beta_ = 1.0;
    std::vector<double> a_;  // a_[n] = a_n for n in [1, N+1]
};

}  // namespace entropic
