#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "support.hpp"
#include "tvdlab/projection.hpp"
#include "tvdlab/tv_classic.hpp"

using namespace tvd;

namespace {

// Area of [x0,x1] x [y0,y1] inside the diamond |x| + |y| <= 1. The covered
// height is piecewise linear in x with kinks where 1 - |x| equals +-y0 or
// +-y1, so the trapezoid rule over those breakpoints is exact.
double diamond_overlap(double x0, double x1, double y0, double y1) {
    const auto height = [&](double x) {
        const double r = 1.0 - std::abs(x);
        if (r <= 0.0) return 0.0;
        return std::max(0.0, std::min(y1, r) - std::max(y0, -r));
    };
    std::vector<double> xs{x0, x1};
    for (double c : {0.0, 1.0, 1.0 - y1, 1.0 + y1, 1.0 - y0, 1.0 + y0}) {
        for (double s : {c, -c}) {
            if (s > x0 && s < x1) xs.push_back(s);
        }
    }
    std::sort(xs.begin(), xs.end());
    double area = 0.0;
    for (std::size_t k = 1; k < xs.size(); ++k) {
        area += 0.5 * (xs[k] - xs[k - 1]) * (height(xs[k]) + height(xs[k - 1]));
    }
    return area;
}

double brute_tv_isotropic(const std::vector<std::vector<double>>& u, double dx) {
    const std::size_t n = u.size();
    double tv = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double d1 = i + 1 < n ? u[i + 1][j] - u[i][j] : 0.0;
            const double d2 = j + 1 < n ? u[i][j + 1] - u[i][j] : 0.0;
            tv += std::sqrt(d1 * d1 + d2 * d2);
        }
    }
    return tv * dx;
}

}  // namespace

TEST_CASE("classic TVs of simple fields") {
    CellField f(make_grid(6, {0, 3, 0, 3}), 2.0);
    CHECK(tv_anisotropic(f) == 0.0);
    CHECK(tv_isotropic(f) == 0.0);
    f.values.fill(0.0);
    f(2, 3) = 1.0;
    CHECK(tv_anisotropic(f) == doctest::Approx(4 * 0.5));
    CHECK(tv_isotropic(f) == doctest::Approx((2 + std::numbers::sqrt2) * 0.5));
}

TEST_CASE("boundary differences are dropped") {
    CellField f(make_grid(3, {0, 3, 0, 3}));
    f(0, 0) = 1.0;
    // Only the two forward jumps out of the corner cell exist.
    CHECK(tv_anisotropic(f) == doctest::Approx(2.0));
    CHECK(tv_isotropic(f) == doctest::Approx(std::numbers::sqrt2));
}

TEST_CASE("pulse oracles reject n not divisible by 4") {
    CHECK_THROWS_AS(square_pulse_tv_oracles(42), std::invalid_argument);
    CHECK_NOTHROW(square_pulse_tv_oracles(44));
}

TEST_CASE("tva_v closed form") {
    CHECK(square_pulse_tv_oracles(40).tva_v == doctest::Approx(7.6).epsilon(1e-14));
    CHECK(square_pulse_tv_oracles(80).tva_v == doctest::Approx(7.8).epsilon(1e-14));
    CHECK(square_pulse_tv_oracles(160).tva_v == doctest::Approx(7.9).epsilon(1e-14));
}

TEST_CASE("pulse oracles agree with projected fields") {
    for (std::size_t n : {20u, 40u, 80u, 160u}) {
        const Grid g = make_grid(n, {-2, 2, -2, 2});
        const PulseTvOracles o = square_pulse_tv_oracles(n);
        const CellField u = project_cell_averages(ShapeSpec::square_pulse(), g);
        const CellField v = project_cell_averages(ShapeSpec::rotated_square_pulse(), g);
        CHECK(tv_anisotropic(u) == doctest::Approx(o.tva_u).epsilon(1e-12));
        CHECK(tv_anisotropic(v) == doctest::Approx(o.tva_v).epsilon(1e-12));
        CHECK(tv_isotropic(v) == doctest::Approx(o.tvis_v).epsilon(1e-12));
    }
}

TEST_CASE("tvis_v oracle matches an independent enumeration of the diamond") {
    for (std::size_t n : {8u, 20u, 40u, 80u, 160u}) {
        const double dx = 4.0 / static_cast<double>(n);
        std::vector<std::vector<double>> u(n, std::vector<double>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const double x0 = -2.0 + static_cast<double>(i) * dx;
                const double y0 = -2.0 + static_cast<double>(j) * dx;
                u[i][j] = diamond_overlap(x0, x0 + dx, y0, y0 + dx) / (dx * dx);
            }
        }
        CHECK(brute_tv_isotropic(u, dx) == doctest::Approx(square_pulse_tv_oracles(n).tvis_v).epsilon(1e-12));
    }
}

TEST_CASE("classic TV properties on random fields") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const CellField a = testing::random_field(9, rng);
        const CellField b = testing::random_field(9, rng);
        const double c = std::uniform_real_distribution<double>(-4, 4)(rng);
        for (auto tv : {tv_anisotropic, tv_isotropic}) {
            CHECK(tv(testing::scaled(a, c)) == doctest::Approx(std::abs(c) * tv(a)).epsilon(1e-12));
            CHECK(tv(testing::sum(a, b)) <= tv(a) + tv(b) + 1e-12);
        }
        const double ta = tv_anisotropic(a);
        const double ti = tv_isotropic(a);
        CHECK(ti <= ta + 1e-12);
        CHECK(ta <= std::numbers::sqrt2 * ti + 1e-12);
    }
}
