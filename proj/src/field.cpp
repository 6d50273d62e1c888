// SPDX-License-Identifier: Apache-2.0
#include "entropic/field.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "entropic/gls.hpp"

namespace entropic {
namespace {

std::vector<std::string> numbered_labels(std::size_t n, const std::string& prefix) {
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = prefix + std::to_string(i);
    return labels;
}

class ConstantField final : public FieldModel {
public:
    ConstantField(double value, std::size_t n)
        : value_(value), labels_(numbered_labels(n, "t")) {}

    std::size_t size() const override { return labels_.size(); }
    const std::vector<std::string>& labels() const override { return labels_; }

    double moment(std::size_t, double) const override { return std::abs(value_); }
    double pair_moment(std::size_t, std::size_t, double) const override { return 0.0; }

    void sample_path(Rng&, std::span<double> out) const override {
        for (double& x : out) x = value_;
    }

    double b_max() const override { return kInf; }
    std::string describe() const override {
        std::ostringstream os;
        os << "constant(" << value_ << ") on " << labels_.size() << " points";
        return os.str();
    }

private:
    double value_;
    std::vector<std::string> labels_;
};

class GaussianField final : public FieldModel {
public:
    GaussianField(std::vector<std::string> labels, std::vector<double> cov,
                  double psd_tol)
        : labels_(std::move(labels)) {
        const std::size_t n = labels_.size();
        if (cov.size() != n * n)
            throw std::invalid_argument("gaussian field: covariance must be n x n");
        cov_ = std::move(cov);

        Eigen::MatrixXd sigma(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                sigma(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    0.5 * (cov_[i * n + j] + cov_[j * n + i]);

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sigma);
        if (eig.info() != Eigen::Success)
            throw std::runtime_error("gaussian field: eigendecomposition failed");
        const double scale = std::max(1.0, sigma.diagonal().maxCoeff());
        Eigen::VectorXd lam = eig.eigenvalues();
        for (Eigen::Index i = 0; i < lam.size(); ++i) {
            if (lam(i) < -psd_tol * scale) {
                std::ostringstream os;
                os << "gaussian field: covariance not PSD, eigenvalue "
                   << lam(i) << " < " << -psd_tol * scale;
                throw std::invalid_argument(os.str());
            }
            lam(i) = std::max(lam(i), 0.0);
        }
        factor_ = eig.eigenvectors() * lam.cwiseSqrt().asDiagonal();
    }

    std::size_t size() const override { return labels_.size(); }
    const std::vector<std::string>& labels() const override { return labels_; }

    double moment(std::size_t t, double p) const override {
        return std::sqrt(var(t, t)) * gaussian_abs_moment(p);
    }

    double pair_moment(std::size_t t, std::size_t s, double p) const override {
        const double v = var(t, t) + var(s, s) - 2.0 * var(t, s);
        return std::sqrt(std::max(v, 0.0)) * gaussian_abs_moment(p);
    }

    void sample_path(Rng& rng, std::span<double> out) const override {
        const std::size_t n = labels_.size();
        Eigen::VectorXd z(static_cast<Eigen::Index>(n));
        for (std::size_t i = 0; i < n; ++i)
            z(static_cast<Eigen::Index>(i)) = rng.next_normal();
        const Eigen::VectorXd x = factor_ * z;
        for (std::size_t i = 0; i < n; ++i) out[i] = x(static_cast<Eigen::Index>(i));
    }

    double b_max() const override { return kInf; }
    std::string describe() const override {
        std::ostringstream os;
        os << "gaussian field on " << labels_.size() << " points";
        return os.str();
    }

private:
    double var(std::size_t i, std::size_t j) const {
        return cov_[i * labels_.size() + j];
    }

    std::vector<std::string> labels_;
    std::vector<double> cov_;
    Eigen::MatrixXd factor_;
};

}  // namespace

std::unique_ptr<FieldModel> make_constant_field(double value, std::size_t n_points) {
    if (n_points == 0)
        throw std::invalid_argument("constant field: need at least one point");
    return std::make_unique<ConstantField>(value, n_points);
}

std::unique_ptr<FieldModel> make_gaussian_field(std::vector<std::string> labels,
                                                std::vector<double> covariance,
                                                double psd_tol) {
    if (labels.empty())
        throw std::invalid_argument("gaussian field: need at least one point");
    return std::make_unique<GaussianField>(std::move(labels), std::move(covariance),
                                           psd_tol);
}

std::unique_ptr<FieldModel> make_gaussian_circle_field(std::size_t n_points,
                                                       double length_scale) {
    if (n_points == 0)
        throw std::invalid_argument("gaussian circle: need at least one point");
    if (!(length_scale > 0.0))
        throw std::invalid_argument("gaussian circle: length scale must be > 0");
    const double two_pi = 6.283185307179586476925286766559;
    std::vector<double> cov(n_points * n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        for (std::size_t j = 0; j < n_points; ++j) {
            const double angle = two_pi * static_cast<double>(i > j ? i - j : j - i) /
                                 static_cast<double>(n_points);
            const double chord = 2.0 * std::sin(0.5 * angle);
            cov[i * n_points + j] =
                std::exp(-chord * chord / (2.0 * length_scale * length_scale));
        }
    }
    return make_gaussian_field(numbered_labels(n_points, "c"), std::move(cov));
}

}  // namespace entropic
