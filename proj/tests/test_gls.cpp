// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <vector>

#include "entropic/gls.hpp"
#include "entropic/field.hpp"
#include "entropic/grid.hpp"
#include "entropic/rng.hpp"
#include "oracles.hpp"

using namespace entropic;

TEST_SUITE("lp_norm") {

TEST_CASE("constant sample array gives |c| for any p") {
    const std::vector<double> data(100, -3.5);
    for (double p : {1.0, 2.0, 3.7, 10.0})
        CHECK(lp_norm(std::span<const double>(data), p) == doctest::Approx(3.5).epsilon(1e-14));
}

TEST_CASE("sqrt(|ln x|) density: p-th power equals Gamma(p/2+1)") {
    const auto f = [](double x) { return std::sqrt(std::abs(std::log(x))); };
    for (double p : {2.0, 4.0}) {
        const double norm = lp_norm(f, p);
        const double expected = std::pow(std::tgamma(0.5 * p + 1.0), 1.0 / p);
        CHECK(norm == doctest::Approx(expected).epsilon(1e-9));
    }
    CHECK(lp_norm(f, 2.0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(lp_norm(f, 4.0) == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-9));
}

TEST_CASE("x^(-1/8) density at p=4 gives 2^(1/4)") {
    const auto f = [](double x) { return std::pow(x, -0.125); };
    // integral of x^(-p/8) over (0,1) is 8/(8-p); cross-check by graded Simpson
    const double p = 4.0;
    const double direct = oracles::simpson_unit_graded(
        [&](double x) { return std::pow(std::abs(f(x)), p); });
    CHECK(direct == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(lp_norm(f, p) == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-10));
}

TEST_CASE("divergent density is reported, not clamped") {
    const auto f = [](double x) { return std::pow(x, -0.125); };
    const LpDensityResult r = lp_norm_density(f, 9.0);  // x^(-9/8) diverges
    CHECK_FALSE(r.converged);
    CHECK(is_inf(r.value));
    CHECK_FALSE(r.note.empty());
}

TEST_CASE("preconditions") {
    const std::vector<double> empty;
    CHECK_THROWS_AS(lp_norm(std::span<const double>(empty), 2.0), std::invalid_argument);
    const std::vector<double> one{1.0};
    CHECK_THROWS_AS(lp_norm(std::span<const double>(one), 0.5), std::invalid_argument);
}

TEST_CASE("nondecreasing in p on random sample data") {
    Rng rng(12345);
    for (int rep = 0; rep < 8; ++rep) {
        std::vector<double> data(257);
        for (double& x : data) x = 3.0 * rng.next_normal() + rng.next_uniform();
        double prev = 0.0;
        for (double p = 1.0; p <= 9.0; p += 0.5) {
            const double v = lp_norm(std::span<const double>(data), p);
            CHECK(v >= prev - 1e-12 * v);
            prev = v;
        }
    }
}

}  // TEST_SUITE

TEST_SUITE("gls_norm") {

TEST_CASE("moments equal to psi give norm 1") {
    const PsiFunction psi = PsiFunction::sqrt_p();
    const MomentOracle m = [](double p) { return std::sqrt(p); };
    const GlsNormResult r = gls_norm(m, psi);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("standard gaussian under sqrt(p): finite with located maximizer") {
    const PsiFunction psi = PsiFunction::sqrt_p();
    const MomentOracle m = moment_oracle_gaussian(1.0);
    const std::vector<double> grid = psi.default_p_grid();
    const GlsNormResult r = gls_norm(m, psi, grid);

    // Independent oracle: direct max over the same grid.
    double best = 0.0, best_p = grid.front();
    for (double p : grid) {
        const double ratio = gaussian_abs_moment(p) / std::sqrt(p);
        if (ratio > best) { best = ratio; best_p = p; }
    }
    CHECK(r.value == doctest::Approx(best).epsilon(1e-14));
    CHECK(r.maximizer_p == doctest::Approx(best_p));
    CHECK(r.value > 0.5);
    CHECK(r.value < 1.0);
}

TEST_CASE("zero element has norm 0") {
    const PsiFunction psi = PsiFunction::constant(1.0, 4.0);
    const MomentOracle m = [](double) { return 0.0; };
    CHECK(gls_norm(m, psi).value == 0.0);
}

TEST_CASE("homogeneity under scaling") {
    const PsiFunction psi = PsiFunction::beta_b(0.5, 3.0);
    Rng rng(99);
    std::vector<double> data(300);
    for (double& x : data) x = rng.next_normal();
    const MomentOracle m = moment_oracle_from_samples(data);
    std::vector<double> scaled = data;
    for (double& x : scaled) x *= -2.5;
    const MomentOracle mc = moment_oracle_from_samples(scaled);
    CHECK(gls_norm(mc, psi).value ==
          doctest::Approx(2.5 * gls_norm(m, psi).value).epsilon(1e-12));
}

TEST_CASE("all-infinite moments flag") {
    const PsiFunction psi = PsiFunction::constant(1.0, 4.0);
    const MomentOracle m = [](double) { return kInf; };
    const GlsNormResult r = gls_norm(m, psi);
    CHECK(r.all_infinite);
    CHECK(is_inf(r.value));
}

}  // TEST_SUITE

TEST_SUITE("natural_psi") {

TEST_CASE("single gaussian point reproduces the gaussian moment curve") {
    const auto field = make_gaussian_field({"t0"}, {1.0});
    const std::vector<double> grid = geomspace(1.0, 16.0, 32);
    const PsiFunction psi = natural_psi(*field, grid);
    for (double p : grid)
        CHECK(psi(p) == doctest::Approx(gaussian_abs_moment(p)).epsilon(1e-9));
}

TEST_CASE("identical marginals: psi equals the common moment curve") {
    // Perfectly correlated unit-variance gaussian field: same marginal law.
    std::vector<double> cov(9, 1.0);
    const auto field = make_gaussian_field({"a", "b", "c"}, cov);
    const std::vector<double> grid = geomspace(1.0, 8.0, 24);
    const PsiFunction psi = natural_psi(*field, grid);
    for (double p : grid)
        CHECK(psi(p) == doctest::Approx(gaussian_abs_moment(p)).epsilon(1e-12));
}

TEST_CASE("normalization: every point has gls norm <= 1 and the sup is 1") {
    const auto field = make_gaussian_circle_field(8, 0.7);
    const std::vector<double> grid = geomspace(1.0, 32.0, 48);
    const PsiFunction psi = natural_psi(*field, grid);
    double sup = 0.0;
    for (std::size_t t = 0; t < field->size(); ++t) {
        const MomentOracle m = [&field, t](double p) { return field->moment(t, p); };
        const double norm = gls_norm(m, psi, grid).value;
        CHECK(norm <= 1.0 + 1e-12);
        sup = std::max(sup, norm);
    }
    CHECK(sup == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("field with no GLS home is rejected") {
    // Moments infinite at every p > 1: a one-point field made of a density
    // outside every L_p, p > 1.
    class NoHome final : public FieldModel {
    public:
        std::size_t size() const override { return 1; }
        const std::vector<std::string>& labels() const override { return labels_; }
        double moment(std::size_t, double p) const override {
            return p > 1.0 ? kInf : 1.0;
        }
        double pair_moment(std::size_t, std::size_t, double) const override {
            return 0.0;
        }
        void sample_path(Rng&, std::span<double> out) const override { out[0] = 0.0; }
        double b_max() const override { return kInf; }
        std::string describe() const override { return "no-home"; }

    private:
        std::vector<std::string> labels_{"t"};
    };
    NoHome field;
    const std::vector<double> grid = geomspace(1.0, 8.0, 24);
    CHECK_THROWS_AS(natural_psi(field, grid), std::domain_error);
}

}  // TEST_SUITE

TEST_SUITE("luxemburg_norm") {

TEST_CASE("zero input") {
    const std::vector<double> zeros(10, 0.0);
    CHECK(luxemburg_norm(std::span<const double>(zeros), young_power(2.0)) == 0.0);
}

TEST_CASE("power young function reduces to the lp norm") {
    Rng rng(7);
    std::vector<double> data(200);
    for (double& x : data) x = rng.next_normal() + 0.3;
    for (double p : {1.0, 2.0, 4.0}) {
        const double lux = luxemburg_norm(std::span<const double>(data), young_power(p));
        const double lp = lp_norm(std::span<const double>(data), p);
        CHECK(lux == doctest::Approx(lp).epsilon(1e-7));
    }
}

TEST_CASE("scaling: ||c eta|| = |c| ||eta||") {
    Rng rng(8);
    std::vector<double> data(128), scaled(128);
    for (std::size_t i = 0; i < data.size(); ++i) {
        data[i] = rng.next_normal();
        scaled[i] = -3.0 * data[i];
    }
    const YoungFunction phi = young_power(3.0);
    CHECK(luxemburg_norm(std::span<const double>(scaled), phi) ==
          doctest::Approx(3.0 * luxemburg_norm(std::span<const double>(data), phi))
              .epsilon(1e-7));
}

TEST_CASE("bisection against a fine manual scan of k") {
    const auto f = [](double x) { return std::pow(x, -0.125); };
    // quartic-over-log young function used by the continuity distances
    const YoungFunction phi{
        [](double u) {
            const double e = 2.718281828459045;
            if (u <= e) return e * e * u * u;
            return std::pow(u, 4.0) / std::log(u);
        },
        "u^4/ln u"};
    const double lux = luxemburg_norm(f, phi, 1e-9);
    CHECK(lux > 0.0);
    // Scan: expectation must cross 1 exactly at the reported norm.
    const auto expectation = [&](double k) {
        return oracles::simpson_unit_graded(
            [&](double x) { return phi(std::abs(f(x)) / k); });
    };
    CHECK(expectation(lux * 1.0001) <= 1.0);
    CHECK(expectation(lux * 0.9999) > 1.0);
}

TEST_CASE("young function validation rejects bad shapes") {
    CHECK_THROWS_AS(validate_young(YoungFunction{
                        [](double u) { return u - 1.0; }, "shifted"}),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_young(YoungFunction{
                        [](double u) { return std::sqrt(u); }, "concave"}),
                    std::invalid_argument);
    CHECK_NOTHROW(validate_young(young_power(2.0)));
}

}  // TEST_SUITE
