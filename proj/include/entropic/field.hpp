// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "entropic/common.hpp"
#include "entropic/rng.hpp"

namespace entropic {

// A random field over a finite index set. Moment oracles are analytic (or
// sample-estimated by the concrete type); the path sampler is deterministic
// given the generator state.
class FieldModel {
public:
    virtual ~FieldModel() = default;

    virtual std::size_t size() const = 0;
    virtual const std::vector<std::string>& labels() const = 0;

    // |xi(t)|_p and |xi(t) - xi(s)|_p.
    virtual double moment(std::size_t t, double p) const = 0;
    virtual double pair_moment(std::size_t t, std::size_t s, double p) const = 0;

    // Writes one path over the index set.
    virtual void sample_path(Rng& rng, std::span<double> out) const = 0;

    // Upper end of the p-range on which the moment oracles are valid.
    virtual double b_max() const = 0;

    virtual std::string describe() const = 0;
};

// xi(t) = c for every t.
std::unique_ptr<FieldModel> make_constant_field(double value, std::size_t n_points);

// Centered Gaussian field with the given covariance matrix (row-major).
// Sampling factors the covariance through a symmetric eigendecomposition;
// eigenvalues in [-psd_tol, 0) are clamped to 0, anything below -psd_tol is
// rejected with the offending eigenvalue in the message.
std::unique_ptr<FieldModel> make_gaussian_field(std::vector<std::string> labels,
                                                std::vector<double> covariance,
                                                double psd_tol = 1e-12);

// Gaussian field on n equispaced points of the unit circle with
// squared-exponential covariance exp(-chord^2 / (2 len^2)).
std::unique_ptr<FieldModel> make_gaussian_circle_field(std::size_t n_points,
                                                       double length_scale);

}  // namespace entropic
