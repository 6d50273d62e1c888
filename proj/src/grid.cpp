// SPDX-License-Identifier: Apache-2.0
#include "entropic/grid.hpp"

#include <cmath>

namespace entropic {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (n == 0) throw std::invalid_argument("linspace: count must be >= 1");
    if (n == 1) return {lo};
    std::vector<double> v(n);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) v[i] = lo + step * static_cast<double>(i);
    v.back() = hi;
    return v;
}

std::vector<double> geomspace(double lo, double hi, std::size_t n) {
    if (lo <= 0.0 || hi <= 0.0)
        throw std::invalid_argument("geomspace: endpoints must be positive");
    if (n == 0) throw std::invalid_argument("geomspace: count must be >= 1");
    if (n == 1) return {lo};
    std::vector<double> v(n);
    const double llo = std::log(lo);
    const double lhi = std::log(hi);
    const double step = (lhi - llo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = std::exp(llo + step * static_cast<double>(i));
    v.front() = lo;
    v.back() = hi;
    return v;
}

std::vector<double> GridSpec::materialize() const {
    if (count < 2) throw std::invalid_argument("grid: count must be >= 2");
    if (!(min < max)) throw std::invalid_argument("grid: min must be < max");
    return spacing == GridSpacing::Log ? geomspace(min, max, count)
                                       : linspace(min, max, count);
}

GridSpacing parse_spacing(const std::string& s) {
    if (s == "linear") return GridSpacing::Linear;
    if (s == "log") return GridSpacing::Log;
    throw std::invalid_argument("grid: spacing must be 'linear' or 'log', got '" + s + "'");
}

std::string spacing_name(GridSpacing s) {
    return s == GridSpacing::Log ? "log" : "linear";
}

}  // namespace entropic
