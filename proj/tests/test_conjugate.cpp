// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "entropic/conjugate.hpp"
#include "entropic/grid.hpp"
#include "entropic/rng.hpp"
#include "oracles.hpp"

using namespace entropic;

namespace {

// The built-in test family of generating functions.
std::vector<PsiFunction> test_family() {
    std::vector<PsiFunction> family;
    family.push_back(PsiFunction::constant(1.0, 4.0));
    family.push_back(PsiFunction::sqrt_p());
    family.push_back(PsiFunction::beta_b(0.125, 4.0));  // (4-p)^(-1/8)
    family.push_back(PsiFunction::beta_b(0.5, 3.0));
    family.push_back(PsiFunction::beta_b(1.0, 4.0));
    return family;
}

double nu_star_oracle(const PsiFunction& psi, double x) {
    const double hi = is_inf(psi.domain_hi())
                          ? 4096.0
                          : psi.domain_hi() - (psi.right_open() ? 1e-9 : 0.0);
    return oracles::grid_max(
        [&](double p) {
            const double nu = psi.nu(p);
            return is_inf(nu) ? -kInf : x * p - nu;
        },
        psi.domain_lo(), hi);
}

double co_transform_oracle(const PsiFunction& psi, double x) {
    const double p_hi = psi.domain_hi();
    double y_lo = is_inf(p_hi) ? 0.0 : 1.0 / p_hi;
    if (psi.right_open() || y_lo == 0.0) y_lo += 1e-9;
    const double y_hi = 1.0 / psi.domain_lo();
    return oracles::grid_min(
        [&](double y) {
            const double v = psi(1.0 / y);
            return is_inf(v) ? kInf : x * y + std::log(v);
        },
        y_lo, y_hi);
}

}  // namespace

TEST_SUITE("legendre") {

TEST_CASE("quadratic is self-conjugate") {
    const auto f = ScalarFunctionOnInterval::closed_form(
        [](double y) { return 0.5 * y * y; }, -10.0, 10.0);
    CHECK(legendre(f, 1.0).value == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("zero function on [1,4): supremum approached at the open end") {
    const auto f = ScalarFunctionOnInterval::closed_form(
        [](double) { return 0.0; }, 1.0, 4.0, /*right_open=*/true);
    CHECK(legendre(f, 1.0).value == doctest::Approx(4.0).epsilon(1e-8));
}

TEST_CASE("(p/2) ln p on [1,inf) at x=1 gives e/2") {
    const auto f = ScalarFunctionOnInterval::closed_form(
        [](double p) { return 0.5 * p * std::log(p); }, 1.0, kInf, true);
    const ExtremumResult r = legendre(f, 1.0);
    CHECK_FALSE(r.unbounded);
    CHECK(r.value == doctest::Approx(std::exp(1.0) / 2.0).epsilon(1e-10));
    CHECK(r.arg == doctest::Approx(std::exp(1.0)).epsilon(1e-6));
}

TEST_CASE("unbounded objective is flagged") {
    const auto f = ScalarFunctionOnInterval::closed_form(
        [](double p) { return std::sqrt(p); }, 1.0, kInf, true);
    const ExtremumResult r = legendre(f, 2.0);  // 2p - sqrt(p) climbs forever
    CHECK(r.unbounded);
    CHECK(is_inf(r.value));
}

TEST_CASE("conjugate is monotone in x for domains in [0,inf)") {
    const auto f = ScalarFunctionOnInterval::closed_form(
        [](double y) { return y * std::log1p(y); }, 0.0, 50.0);
    double prev = -kInf;
    for (double x = -2.0; x <= 3.0; x += 0.25) {
        const double v = legendre(f, x).value;
        CHECK(v >= prev - 1e-12);
        prev = v;
    }
}

TEST_CASE("biconjugation reproduces convex tabulated functions") {
    Rng rng(4242);
    for (int rep = 0; rep < 5; ++rep) {
        // Random convex function: integrate increasing random slopes.
        const std::size_t n = 33;
        std::vector<double> xs = linspace(-2.0, 3.0, n);
        std::vector<double> slopes(n - 1);
        double s = -3.0 * rng.next_uniform();
        for (double& sl : slopes) {
            sl = s;
            s += 0.5 * rng.next_uniform();
        }
        std::vector<double> ys(n, 1.0 + rng.next_uniform());
        for (std::size_t i = 1; i < n; ++i)
            ys[i] = ys[i - 1] + slopes[i - 1] * (xs[i] - xs[i - 1]);
        const auto f = ScalarFunctionOnInterval::tabulated(xs, ys);

        // Conjugate on a grid containing the knots of f* (the slopes of f),
        // then conjugate back.
        std::vector<double> xg = linspace(slopes.front() - 1.0, slopes.back() + 1.0, 257);
        xg.insert(xg.end(), slopes.begin(), slopes.end());
        std::sort(xg.begin(), xg.end());
        xg.erase(std::unique(xg.begin(), xg.end(),
                             [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                 xg.end());
        std::vector<double> fstar(xg.size());
        for (std::size_t i = 0; i < xg.size(); ++i)
            fstar[i] = legendre(f, xg[i]).value;
        const auto fs = ScalarFunctionOnInterval::tabulated(xg, fstar);

        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double back = legendre(fs, xs[i]).value;
            CHECK(back == doctest::Approx(ys[i]).epsilon(1e-4));
        }
    }
}

}  // TEST_SUITE

TEST_SUITE("co_transform") {

TEST_CASE("constant psi on [1,4): v*(x) = x/4 for x >= 0") {
    const PsiFunction psi = PsiFunction::constant(1.0, 4.0);
    for (double x : {0.0, 0.5, 1.0, 2.0, 3.5})
        CHECK(co_transform(psi, x).value == doctest::Approx(x / 4.0).epsilon(1e-8));
}

TEST_CASE("sqrt(p) at x = ln 2") {
    const PsiFunction psi = PsiFunction::sqrt_p();
    const double x = std::log(2.0);
    const double expected = 0.5 + 0.5 * std::log(2.0 * x);
    CHECK(co_transform(psi, x).value == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("infimum dominance: v*(x) <= x y + v(y) on a y-grid") {
    for (const PsiFunction& psi : test_family()) {
        const double x = 1.3;
        const double vstar = co_transform(psi, x).value;
        const double y_lo =
            (is_inf(psi.domain_hi()) ? 0.0 : 1.0 / psi.domain_hi()) + 1e-6;
        for (double y : linspace(y_lo, 1.0 / psi.domain_lo(), 64)) {
            const double psi_val = psi(1.0 / y);
            if (is_inf(psi_val)) continue;
            CHECK(vstar <= x * y + std::log(psi_val) + 1e-9);
        }
    }
}

TEST_CASE("concave and nondecreasing in x on x >= 0") {
    for (const PsiFunction& psi : test_family()) {
        std::vector<double> xs = linspace(0.0, 6.0, 25);
        std::vector<double> vs(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i)
            vs[i] = co_transform(psi, xs[i]).value;
        for (std::size_t i = 1; i < xs.size(); ++i)
            CHECK(vs[i] >= vs[i - 1] - 1e-10);
        for (std::size_t i = 1; i + 1 < xs.size(); ++i)
            CHECK(vs[i - 1] - 2.0 * vs[i] + vs[i + 1] <= 1e-8);
    }
}

}  // TEST_SUITE

TEST_SUITE("nu_star") {

TEST_CASE("constant psi on [1,4): nu*(x) = 4x for x > 0") {
    const PsiFunction psi = PsiFunction::constant(1.0, 4.0);
    for (double x : {0.25, 1.0, 2.0})
        CHECK(nu_star(psi, x).value == doctest::Approx(4.0 * x).epsilon(1e-8));
}

TEST_CASE("sqrt(p): nu*(1) = e/2; tail exponent shape u^2/(2e)") {
    const PsiFunction psi = PsiFunction::sqrt_p();
    CHECK(nu_star(psi, 1.0).value ==
          doctest::Approx(std::exp(1.0) / 2.0).epsilon(1e-8));
    for (double u : {15.0, 40.0}) {
        const double x = std::log(u);
        CHECK(nu_star(psi, x).value ==
              doctest::Approx(u * u / (2.0 * std::exp(1.0))).epsilon(1e-8));
    }
}

TEST_CASE("small x: supremum sits at p = 1 when psi(1) = 1") {
    const PsiFunction psi = PsiFunction::beta_b(0.5, 2.0);  // psi(1) = 1
    // subgradient of nu at p=1 bounds the region where p*=1
    for (double x : {-2.0, -0.5})
        CHECK(nu_star(psi, x).value == doctest::Approx(x).epsilon(1e-8));
}

TEST_CASE("oracle equivalence over the test family") {
    for (const PsiFunction& psi : test_family()) {
        for (double x : {0.25, 0.7, 1.0, 2.0}) {
            CHECK(std::abs(nu_star(psi, x).value - nu_star_oracle(psi, x)) <= 1e-6);
            CHECK(std::abs(co_transform(psi, x).value - co_transform_oracle(psi, x)) <=
                  1e-6);
        }
    }
}

}  // TEST_SUITE

TEST_SUITE("orlicz_from_psi") {

TEST_CASE("stitching is continuous at |u| = e") {
    for (const PsiFunction& psi : test_family()) {
        const YoungFunction n_psi = orlicz_from_psi(psi);
        const double e = std::exp(1.0);
        const double below = n_psi(e * (1.0 - 1e-9));
        const double above = n_psi(e * (1.0 + 1e-9));
        CHECK(below == doctest::Approx(above).epsilon(1e-5));
    }
}

TEST_CASE("constant psi on [1,4): quartic growth") {
    const YoungFunction n_psi = orlicz_from_psi(PsiFunction::constant(1.0, 4.0));
    for (double u : {10.0, 50.0}) {
        // exp(nu*(ln u)) = u^4 up to the open-endpoint inset
        CHECK(std::log(n_psi(u)) == doctest::Approx(4.0 * std::log(u)).epsilon(1e-4));
    }
}

TEST_CASE("sqrt(p): growth like exp(u^2/(2e))") {
    const YoungFunction n_psi = orlicz_from_psi(PsiFunction::sqrt_p());
    for (double u : {8.0, 20.0}) {
        const double expected = u * u / (2.0 * std::exp(1.0));
        CHECK(std::log(n_psi(u)) == doctest::Approx(expected).epsilon(2e-3));
    }
}

TEST_CASE("non-convex nu is rejected") {
    // psi with nu(p) = p ln psi(p) concave: psi = exp(sqrt(p)/p) gives
    // nu = sqrt(p).
    std::vector<double> ps = linspace(1.0, 16.0, 32);
    std::vector<double> vs(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i)
        vs[i] = std::exp(std::sqrt(ps[i]) / ps[i]);
    const PsiFunction psi = PsiFunction::tabulated(ps, vs);
    CHECK_THROWS_AS(orlicz_from_psi(psi), std::domain_error);
}

}  // TEST_SUITE
