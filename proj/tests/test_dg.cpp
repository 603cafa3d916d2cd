#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "support.hpp"
#include "tvdlab/dg.hpp"
#include "tvdlab/errors.hpp"
#include "tvdlab/projection.hpp"

using namespace tvd;

namespace {

double max_abs(const DGState& s) {
    double m = 0.0;
    for (const Modes& c : s.coeffs.flat()) {
        m = std::max({m, std::abs(c.c00), std::abs(c.c10), std::abs(c.c01), std::abs(c.c11)});
    }
    return m;
}

DGState combine(double a, const DGState& x, double b, const DGState& y) {
    DGState out = x;
    for (std::size_t k = 0; k < out.coeffs.flat().size(); ++k) {
        out.coeffs.flat()[k] = a * x.coeffs.flat()[k] + b * y.coeffs.flat()[k];
    }
    return out;
}

}  // namespace

TEST_CASE("projection of linear and bilinear data") {
    const Grid g = make_grid(10, {-1, 1, -1, 1});
    const DGState s = project_dg([](double x, double y) { return 3 * x - y + 2 * x * y; }, g);
    const double h = g.dx() / 2;
    for (std::size_t i = 0; i < 10; ++i) {
        for (std::size_t j = 0; j < 10; ++j) {
            const double x = g.x_center(i), y = g.y_center(j);
            CHECK(s(i, j).c00 == doctest::Approx(3 * x - y + 2 * x * y).epsilon(1e-13));
            CHECK(s(i, j).c10 == doctest::Approx((3 + 2 * y) * h).epsilon(1e-13));
            CHECK(s(i, j).c01 == doctest::Approx((-1 + 2 * x) * h).epsilon(1e-13));
            CHECK(s(i, j).c11 == doctest::Approx(2 * h * h).epsilon(1e-13));
        }
    }
}

TEST_CASE("cell means of the projection match cell averages") {
    const Grid g = make_grid(40, {-1, 1, -1, 1});
    const CellField a = project_cell_averages(ShapeSpec::elliptic_hill(), g);
    const CellField m = cell_means(project_dg(ShapeSpec::elliptic_hill(), g));
    for (std::size_t k = 0; k < a.values.flat().size(); ++k) {
        CHECK(m.values.flat()[k] == doctest::Approx(a.values.flat()[k]).epsilon(1e-12));
    }
}

TEST_CASE("constants are steady states") {
    const Grid g = make_grid(12, {-1, 1, -1, 1});
    for (const FluxModel flux : {FluxModel::rotation(), FluxModel::saddle(), FluxModel::uniform(0.7, -0.3)}) {
        const DGState s = project_dg(ShapeSpec::constant(1.5), g);
        CHECK(max_abs(spatial_residual(s, flux)) < 1e-11);
        for (bool limited : {false, true}) {
            const DGState next = heun_step(s, flux, 0.01, limited);
            for (const Modes& c : next.coeffs.flat()) {
                CHECK(c.c00 == doctest::Approx(1.5).epsilon(1e-13));
                CHECK(std::abs(c.c10) < 1e-12);
            }
        }
    }
    const DGState half = project_dg(ShapeSpec::constant(0.5), g);
    CHECK(max_abs(spatial_residual(half, FluxModel::burgers())) < 1e-12);
    CHECK(heun_step(half, FluxModel::burgers(), 0.01, true).coeffs == half.coeffs);
}

TEST_CASE("residual is linear for the linear fluxes") {
    std::mt19937_64 rng(23);
    const DGState a = testing::random_state(8, rng);
    const DGState b = testing::random_state(8, rng);
    for (const FluxModel flux : {FluxModel::rotation(), FluxModel::saddle(), FluxModel::uniform(-1, 2)}) {
        const DGState ra = spatial_residual(a, flux);
        const DGState rb = spatial_residual(b, flux);
        for (double alpha : {-1.0, 2.0}) {
            const DGState lhs = spatial_residual(combine(alpha, a, 1.0, b), flux);
            const DGState rhs = combine(alpha, ra, 1.0, rb);
            CHECK(max_abs(combine(1.0, lhs, -1.0, rhs)) <= 1e-11 * max_abs(rhs));
        }
    }
}

TEST_CASE("interior fluxes conserve mass") {
    const Grid g = make_grid(40, {-1, 1, -1, 1});
    for (const FluxModel flux : {FluxModel::rotation(), FluxModel::burgers()}) {
        const ShapeSpec shape = flux.is_linear() ? ShapeSpec::cosine_hill() : ShapeSpec::burgers_hill();
        DGState s = project_dg(shape, g);
        const double m0 = total_mass(s);
        const double dt = compute_dt(s, flux, 0.2, 1.0);
        for (int k = 0; k < 10; ++k) {
            s = heun_step(s, flux, dt, true);
        }
        CHECK(total_mass(s) == doctest::Approx(m0).epsilon(1e-12));
    }
}

TEST_CASE("time step from the CFL condition") {
    const Grid g = make_grid(80, {-1, 1, -1, 1});
    const DGState hill = project_dg(ShapeSpec::cosine_hill(), g);
    // Largest |a1| + |a2| over cell centres sits at the corner cells.
    const double lam = 2 * std::numbers::pi * 2 * (1 - g.dx() / 2);
    CHECK(compute_dt(hill, FluxModel::rotation(), 0.2, 1.0) == doctest::Approx(0.2 * g.dx() / lam).epsilon(1e-14));
    CHECK(compute_dt(hill, FluxModel::rotation(), 0.4, 1.0) ==
          doctest::Approx(2 * compute_dt(hill, FluxModel::rotation(), 0.2, 1.0)).epsilon(1e-14));
    CHECK(compute_dt(hill, FluxModel::rotation(), 0.2, 1e-5) == 1e-5);

    const DGState zero(g);
    CHECK(compute_dt(zero, FluxModel::burgers(), 0.2, 0.5) == 0.5);
    CHECK_THROWS_AS(compute_dt(hill, FluxModel::rotation(), 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(compute_dt(hill, FluxModel::rotation(), 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("non-finite state names the cell") {
    DGState s(make_grid(4, {-1, 1, -1, 1}));
    s(2, 1).c01 = std::nan("");
    try {
        spatial_residual(s, FluxModel::rotation());
        FAIL("expected NumericalError");
    } catch (const NumericalError& e) {
        CHECK(std::string(e.what()).find("(3, 2)") != std::string::npos);
    }
}

TEST_CASE("rotated exact solution") {
    const ShapeSpec quarter = rotated_exact(ShapeSpec::cosine_hill(), 0.25);
    CHECK(evaluate_shape(quarter, -0.25, 0.25) == doctest::Approx(1.0));
    const ShapeSpec full = rotated_exact(ShapeSpec::cosine_hill(), 1.0);
    CHECK(evaluate_shape(full, 0.25, 0.25) == doctest::Approx(1.0));
    const DGState s = project_dg(ShapeSpec::cosine_hill(), make_grid(40, {-1, 1, -1, 1}));
    CHECK(l1_error(s, ShapeSpec::cosine_hill()) < l1_error(s, quarter));
}

TEST_CASE("smooth uniform advection converges at second order") {
    const double s2 = 0.2 * 0.2;
    const auto exact = [&](double t) {
        return PointFunction([=](double x, double y) {
            const double dx = x - t + 0.3, dy = y - 0.5 * t + 0.2;
            return std::exp(-(dx * dx + dy * dy) / s2);
        });
    };
    const FluxModel flux = FluxModel::uniform(1.0, 0.5);
    const double t_final = 0.25;
    double prev = 0.0;
    for (std::size_t n : {16u, 32u, 64u}) {
        const Grid g = make_grid(n, {-1, 1, -1, 1});
        DGState s = project_dg(exact(0.0), g);
        const double dt_cfl = compute_dt(s, flux, 0.2, t_final);
        const auto steps = static_cast<std::size_t>(std::ceil(t_final / dt_cfl));
        for (std::size_t k = 0; k < steps; ++k) {
            s = heun_step(s, flux, t_final / static_cast<double>(steps), false);
        }
        const double err = l1_error(s, exact(t_final));
        if (prev > 0.0) {
            MESSAGE("n=" << n << " rate " << std::log2(prev / err));
            CHECK(std::log2(prev / err) >= 1.8);
        }
        prev = err;
    }
}
