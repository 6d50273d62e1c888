// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "entropic/common.hpp"

namespace entropic {

// Generating function psi(p) of a Grand Lebesgue Space, defined on [1, b)
// with b in (1, inf]. Queries at p >= b return +inf (the formal extension).
//
// Built-in closed forms:
//   sqrt_p     psi(p) = sqrt(p),        b = inf
//   const      psi(p) = c on [1, b)
//   beta_b     psi(p) = (b - p)^-beta,  finite b
// plus tabulated grids with linear interpolation between nodes.
class PsiFunction {
public:
    enum class Kind { SqrtP, Const, BetaB, Tabulated };

    static PsiFunction sqrt_p();
    static PsiFunction constant(double value, double b);
    static PsiFunction beta_b(double beta, double b);
    // Tabulated on strictly increasing p-nodes (>= 16 of them, all values
    // positive). `b` defaults to just above the last node.
    static PsiFunction tabulated(std::vector<double> p_nodes,
                                 std::vector<double> values,
                                 double b = 0.0);

    Kind kind() const { return kind_; }
    double b() const { return b_; }

    // p-range the numeric machinery works on. For closed forms the right end
    // is b (open; +inf means the domain is unbounded). For tabulated input it
    // is the last node, closed.
    double domain_lo() const { return domain_lo_; }
    double domain_hi() const { return domain_hi_; }
    bool right_open() const { return right_open_; }

    double operator()(double p) const;

    // nu(p) = p ln psi(p), the exponent function the conjugates act on.
    double nu(double p) const;

    // Default evaluation grid: 64 nodes. For finite b the nodes accumulate
    // geometrically toward the blow-up end, ending at b - eps_b with
    // eps_b = min(0.01, (b-1)/100); for b = inf they are geometric on
    // [1, p_max].
    std::vector<double> default_p_grid(std::size_t count = 64,
                                       double p_max_if_unbounded = 64.0) const;

    // Closed-form parameters (meaningful per kind).
    double const_value() const { return c_; }
    double beta() const { return beta_; }
    const std::vector<double>& nodes_p() const { return p_; }
    const std::vector<double>& nodes_value() const { return v_; }

    std::string describe() const;

    void write_csv(std::ostream& os) const;
    static PsiFunction read_csv(std::istream& is);

private:
    PsiFunction() = default;

    Kind kind_ = Kind::Const;
    double b_ = kInf;
    double c_ = 1.0;
    double beta_ = 0.0;
    std::vector<double> p_, v_;
    double domain_lo_ = 1.0;
    double domain_hi_ = kInf;
    bool right_open_ = true;
};

}  // namespace entropic
