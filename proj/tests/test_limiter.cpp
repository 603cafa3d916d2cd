#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "tvdlab/limiter.hpp"

using namespace tvd;

TEST_CASE("minmod") {
    CHECK(minmod({1, 2, 3}) == 1);
    CHECK(minmod({1, -2}) == 0);
    CHECK(minmod({-0.5, -0.2, -0.9}) == -0.2);
    CHECK(minmod({0.0, 1.0}) == 0);
    CHECK(minmod({-3.0}) == -3.0);
}

TEST_CASE("an isolated spike is flattened") {
    DGState s(make_grid(3, {0, 3, 0, 3}));
    s(1, 1) = {1.0, 0.6, 0.0, 0.3};
    const DGState out = moment_limit(s);
    CHECK(out(1, 1) == Modes{1.0, 0.0, 0.0, 0.0});
    CHECK(out(0, 1) == Modes{});
}

TEST_CASE("unchanged c11 leaves the cell alone") {
    DGState s(make_grid(3, {0, 3, 0, 3}));
    s(1, 1) = {0.0, 1.0, -2.0, 0.0};
    CHECK(moment_limit(s).coeffs == s.coeffs);
}

TEST_CASE("bilinear data is preserved") {
    const Grid g = make_grid(16, {-1, 1, -1, 1});
    const DGState s = project_dg([](double x, double y) { return 0.3 + 2 * x - y + 1.5 * x * y; }, g);
    const DGState out = moment_limit(s);
    for (std::size_t k = 0; k < s.coeffs.flat().size(); ++k) {
        const Modes& a = s.coeffs.flat()[k];
        const Modes& b = out.coeffs.flat()[k];
        CHECK(b.c00 == a.c00);
        CHECK(b.c10 == doctest::Approx(a.c10).epsilon(1e-12));
        CHECK(b.c01 == doctest::Approx(a.c01).epsilon(1e-12));
        CHECK(b.c11 == doctest::Approx(a.c11).epsilon(1e-12));
    }
}

TEST_CASE("alpha out of range") {
    const DGState s(make_grid(3, {0, 3, 0, 3}));
    CHECK_THROWS_AS(moment_limit(s, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(moment_limit(s, 1.5), std::invalid_argument);
    CHECK_NOTHROW(moment_limit(s, 1.0));
}

TEST_CASE("limiter invariants on random states") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        const DGState s = testing::random_state(2 + trial % 9, rng);
        const DGState once = moment_limit(s);
        for (std::size_t k = 0; k < s.coeffs.flat().size(); ++k) {
            const Modes& a = s.coeffs.flat()[k];
            const Modes& b = once.coeffs.flat()[k];
            CHECK(b.c00 == a.c00);
            CHECK(std::abs(b.c10) <= std::abs(a.c10));
            CHECK(std::abs(b.c01) <= std::abs(a.c01));
            CHECK(std::abs(b.c11) <= std::abs(a.c11));
        }
    }
}
