// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace entropic {

enum class GridSpacing { Linear, Log };

// Grid description as it appears in config files:
// {min, max, count, spacing: linear|log}.
struct GridSpec {
    double min = 0.0;
    double max = 1.0;
    std::size_t count = 2;
    GridSpacing spacing = GridSpacing::Linear;

    std::vector<double> materialize() const;
};

std::vector<double> linspace(double lo, double hi, std::size_t n);
std::vector<double> geomspace(double lo, double hi, std::size_t n);

GridSpacing parse_spacing(const std::string& s);
std::string spacing_name(GridSpacing s);

}  // namespace entropic
