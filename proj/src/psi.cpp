// SPDX-License-Identifier: Apache-2.0
#include "entropic/psi.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "entropic/grid.hpp"

namespace entropic {

PsiFunction PsiFunction::sqrt_p() {
    PsiFunction f;
    f.kind_ = Kind::SqrtP;
    f.b_ = kInf;
    f.domain_lo_ = 1.0;
    f.domain_hi_ = kInf;
    f.right_open_ = true;
    return f;
}

PsiFunction PsiFunction::constant(double value, double b) {
    if (!(value > 0.0)) throw std::invalid_argument("psi: constant value must be > 0");
    if (!(b > 1.0)) throw std::invalid_argument("psi: b must be > 1");
    PsiFunction f;
    f.kind_ = Kind::Const;
    f.c_ = value;
    f.b_ = b;
    f.domain_lo_ = 1.0;
    f.domain_hi_ = b;
    f.right_open_ = true;
    return f;
}

PsiFunction PsiFunction::beta_b(double beta, double b) {
    if (!(beta > 0.0)) throw std::invalid_argument("psi: beta must be > 0");
    if (!(b > 1.0) || is_inf(b))
        throw std::invalid_argument("psi: beta_b requires finite b > 1");
    PsiFunction f;
    f.kind_ = Kind::BetaB;
    f.beta_ = beta;
    f.b_ = b;
    f.domain_lo_ = 1.0;
    f.domain_hi_ = b;
    f.right_open_ = true;
    return f;
}

PsiFunction PsiFunction::tabulated(std::vector<double> p_nodes,
                                   std::vector<double> values, double b) {
    if (p_nodes.size() != values.size())
        throw std::invalid_argument("psi: node/value count mismatch");
    if (p_nodes.size() < 16)
        throw std::invalid_argument("psi: tabulated grid needs >= 16 nodes");
    for (std::size_t i = 0; i < p_nodes.size(); ++i) {
        if (i > 0 && !(p_nodes[i] > p_nodes[i - 1]))
            throw std::invalid_argument("psi: p-nodes must be strictly increasing");
        if (!(values[i] > 0.0) || !is_finite(values[i]))
            throw std::invalid_argument("psi: tabulated values must be finite and > 0");
    }
    if (!(p_nodes.front() >= 1.0))
        throw std::invalid_argument("psi: grid must start at p >= 1");
    PsiFunction f;
    f.kind_ = Kind::Tabulated;
    f.p_ = std::move(p_nodes);
    f.v_ = std::move(values);
    f.b_ = (b > f.p_.back()) ? b : std::nextafter(f.p_.back(), kInf);
    f.domain_lo_ = f.p_.front();
    f.domain_hi_ = f.p_.back();
    f.right_open_ = false;
    return f;
}

double PsiFunction::operator()(double p) const {
    if (p >= b_) return kInf;
    switch (kind_) {
        case Kind::SqrtP:
            return std::sqrt(p);
        case Kind::Const:
            return c_;
        case Kind::BetaB:
            return std::pow(b_ - p, -beta_);
        case Kind::Tabulated: {
            // Tolerate round-trip drift (e.g. 1/(1/p)) at the table edges.
            const double slack = 1e-12 * std::max(1.0, p_.back());
            if (p < p_.front() - slack || p > p_.back() + slack) return kInf;
            p = std::clamp(p, p_.front(), p_.back());
            auto it = std::lower_bound(p_.begin(), p_.end(), p);
            const std::size_t j = static_cast<std::size_t>(it - p_.begin());
            if (j == 0 || p_[j] == p) return v_[j];
            const double t = (p - p_[j - 1]) / (p_[j] - p_[j - 1]);
            return v_[j - 1] + t * (v_[j] - v_[j - 1]);
        }
    }
    return kInf;
}

double PsiFunction::nu(double p) const {
    const double psi = (*this)(p);
    if (is_inf(psi)) return kInf;
    return p * std::log(psi);
}

std::vector<double> PsiFunction::default_p_grid(std::size_t count,
                                                double p_max_if_unbounded) const {
    const double lo = domain_lo_;
    if (kind_ == Kind::Tabulated) {
        // Use the tabulation nodes themselves; they already define the
        // resolution the data supports.
        if (p_.size() >= count) return p_;
        return linspace(p_.front(), p_.back(), count);
    }
    if (is_inf(b_)) {
        return geomspace(lo, std::max(p_max_if_unbounded, lo * 2.0), count);
    }
    // Nodes geometric in the distance to b, dense where psi blows up.
    const double eps_b = std::min(0.01, (b_ - 1.0) / 100.0);
    const std::vector<double> gaps = geomspace(b_ - lo, eps_b, count);
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) grid[i] = b_ - gaps[i];
    grid.front() = lo;
    return grid;
}

std::string PsiFunction::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::SqrtP: os << "sqrt_p"; break;
        case Kind::Const: os << "const(" << c_ << ") on [1," << b_ << ")"; break;
        case Kind::BetaB: os << "(b-p)^-beta, beta=" << beta_ << ", b=" << b_; break;
        case Kind::Tabulated:
            os << "tabulated[" << p_.size() << " nodes, p in " << p_.front()
               << ".." << p_.back() << "]";
            break;
    }
    return os.str();
}

void PsiFunction::write_csv(std::ostream& os) const {
    os << "p,psi\n";
    const std::vector<double> grid =
        kind_ == Kind::Tabulated ? p_ : default_p_grid();
    char buf[64];
    for (double p : grid) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p, (*this)(p));
        os << buf;
    }
}

PsiFunction PsiFunction::read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("p,", 0) != 0)
        throw std::invalid_argument("psi csv: missing 'p,psi' header");
    std::vector<double> p, v;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("psi csv: malformed row '" + line + "'");
        p.push_back(std::stod(line.substr(0, comma)));
        v.push_back(std::stod(line.substr(comma + 1)));
    }
    return tabulated(std::move(p), std::move(v));
}

}  // namespace entropic
