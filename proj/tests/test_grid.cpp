#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "tvdlab/errors.hpp"
#include "tvdlab/field_io.hpp"
#include "tvdlab/grid.hpp"
#include "tvdlab/projection.hpp"
#include "tvdlab/quadrature.hpp"
#include "tvdlab/shape.hpp"

using namespace tvd;

TEST_CASE("make_grid spacing and centres") {
    CHECK(make_grid(40, {-2, 2, -2, 2}).dx() == doctest::Approx(0.1).epsilon(1e-15));
    const Grid g = make_grid(80, {-1, 1, -1, 1});
    CHECK(g.dx() == doctest::Approx(0.025).epsilon(1e-15));
    CHECK(g.x_center(0) == doctest::Approx(-1 + 0.0125));
    CHECK(g.y_center(79) == doctest::Approx(1 - 0.0125));
    CHECK(g.x_edge(80) == doctest::Approx(1.0));
}

TEST_CASE("make_grid rejects bad input") {
    CHECK_THROWS_AS(make_grid(10, {-1, 1, -2, 2}), ShapeError);
    CHECK_THROWS_AS(make_grid(1, {-1, 1, -1, 1}), ShapeError);
    CHECK_THROWS_AS(make_grid(4, {1, 1, 1, 1}), ShapeError);
}

TEST_CASE("require_finite names the offending cell") {
    CellField f(make_grid(3, {0, 3, 0, 3}));
    CHECK_NOTHROW(require_finite(f));
    f(1, 2) = std::numeric_limits<double>::quiet_NaN();
    try {
        require_finite(f);
        FAIL("expected NumericalError");
    } catch (const NumericalError& e) {
        CHECK(std::string(e.what()).find("(2, 3)") != std::string::npos);
    }
}

TEST_CASE("gauss_legendre integrates polynomials exactly") {
    for (int order = 1; order <= 10; ++order) {
        const GaussRule& rule = gauss_legendre(order);
        for (int p = 0; p <= 2 * order - 1; ++p) {
            double q = 0.0;
            for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
                q += rule.weights[k] * std::pow(rule.nodes[k], p);
            }
            const double exact = p % 2 == 1 ? 0.0 : 2.0 / (p + 1);
            CHECK(q == doctest::Approx(exact).epsilon(1e-13));
        }
    }
    CHECK_THROWS(gauss_legendre(0));
}

TEST_CASE("evaluate_shape point values") {
    CHECK(evaluate_shape(ShapeSpec::gaussian(), 0, 0) == 1.0);
    CHECK(evaluate_shape(ShapeSpec::square_pulse(), 0, 0) == 1.0);
    CHECK(evaluate_shape(ShapeSpec::square_pulse(), 1.5, 0) == 0.0);
    CHECK(evaluate_shape(ShapeSpec::cosine_hill(), 0.25, 0.25) == 1.0);
    CHECK(evaluate_shape(ShapeSpec::cosine_hill(), 0.25, 0.5) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(evaluate_shape(ShapeSpec::cosine_hill(), 0.25 + 0.125, 0.25) == doctest::Approx(std::cos(2 * std::numbers::pi * 0.125)));
    CHECK(evaluate_shape(ShapeSpec::elliptic_hill(), 0.2, 0.1) ==
          doctest::Approx(std::cos(2 * std::numbers::pi * (0.5 * 0.04 + 1.5 * 0.01))));
    CHECK(evaluate_shape(ShapeSpec::burgers_hill(), -0.5, -0.5) == 1.0);
    CHECK(evaluate_shape(ShapeSpec::constant(2.5), 7, -3) == 2.5);
}

TEST_CASE("rotation moves the hill counterclockwise about the origin") {
    const ShapeSpec hill = ShapeSpec::cosine_hill().rotated(std::numbers::pi / 2);
    CHECK(evaluate_shape(hill, -0.25, 0.25) == doctest::Approx(1.0));
    CHECK(evaluate_shape(hill, 0.25, 0.25) == doctest::Approx(0.0).epsilon(1e-12));
    const ShapeSpec diamond = ShapeSpec::rotated_square_pulse();
    CHECK(evaluate_shape(diamond, 0.99, 0.0) == 1.0);
    CHECK(evaluate_shape(diamond, 0.6, 0.6) == 0.0);
}

TEST_CASE("shape validation") {
    CHECK_THROWS_AS(ShapeSpec::gaussian(0.0).validate(), ConfigError);
    CHECK_THROWS_AS(ShapeSpec::gaussian(std::nan("")).validate(), ConfigError);
    CHECK_NOTHROW(ShapeSpec::constant(0.0).validate());
    CHECK(parse_shape_kind("elliptic_hill") == ShapeKind::elliptic_hill);
    CHECK_THROWS_AS(parse_shape_kind("triangle"), ConfigError);
}

TEST_CASE("constant projects to itself") {
    for (std::size_t n : {2u, 7u, 20u}) {
        const CellField f = project_cell_averages(ShapeSpec::constant(-1.75), make_grid(n, {-3, 1, 0, 4}));
        for (double v : f.values.flat()) {
            CHECK(v == -1.75);
        }
    }
}

TEST_CASE("axis-aligned pulse has the three-value structure") {
    for (std::size_t n : {20u, 40u, 80u, 160u}) {
        const Grid g = make_grid(n, {-2, 2, -2, 2});
        const CellField f = project_cell_averages(ShapeSpec::square_pulse(), g);
        const double a = static_cast<double>(n) / (4 * std::numbers::sqrt2);
        const double frac = a - std::floor(a);
        const std::size_t k = static_cast<std::size_t>(std::floor(a));
        const std::size_t mid = n / 2;
        // Columns mid-k-1 .. mid+k are touched; the outermost are partial.
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const auto weight = [&](std::size_t c) {
                    if (c + k + 1 < mid || c > mid + k) return 0.0;
                    if (c + k + 1 == mid || c == mid + k) return frac;
                    return 1.0;
                };
                CHECK(f(i, j) == doctest::Approx(weight(i) * weight(j)).epsilon(1e-13));
            }
        }
        if (n == 40) {
            CHECK(f(mid + k, mid) == doctest::Approx(0.0710678118654755).epsilon(1e-12));
        }
    }
}

TEST_CASE("45-degree pulse gives one half on edge cells") {
    const Grid g = make_grid(40, {-2, 2, -2, 2});
    const CellField f = project_cell_averages(ShapeSpec::rotated_square_pulse(), g);
    // The diamond |x| + |y| <= 1 cuts cell [0.5, 0.6] x [0.4, 0.5] along its diagonal.
    CHECK(f(25, 24) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(f(20, 20) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(f(39, 39) == 0.0);
    double mass = 0.0;
    for (double v : f.values.flat()) {
        mass += v * g.dx() * g.dx();
    }
    CHECK(mass == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("rotated overlap agrees with fine midpoint sampling") {
    const double x0 = 0.13, x1 = 0.41, y0 = -0.2, y1 = 0.08;
    const double theta = 0.37, h = 0.3, cx = 0.15, cy = -0.05;
    const ShapeSpec spec{ShapeKind::rotated_square_pulse, cx, cy, h, theta, 0.0};
    const int m = 2000;
    double area = 0.0;
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            const double x = x0 + (a + 0.5) * (x1 - x0) / m;
            const double y = y0 + (b + 0.5) * (y1 - y0) / m;
            area += evaluate_shape(spec, x, y);
        }
    }
    area *= (x1 - x0) * (y1 - y0) / (static_cast<double>(m) * m);
    CHECK(rotated_square_overlap(x0, x1, y0, y1, cx, cy, h, theta) == doctest::Approx(area).epsilon(1e-4));
}

TEST_CASE("smooth projection converges at second order in the integral") {
    const auto u = [](double x, double y) { return std::exp(x + 2 * y); };
    const double exact = (std::exp(1.0) - 1) * (std::exp(2.0) - 1) / 2;
    double prev = 0.0;
    for (std::size_t n : {8u, 16u, 32u, 64u}) {
        const Grid g = make_grid(n, {0, 1, 0, 1});
        const CellField f = project_cell_averages(u, g, 1);
        double total = 0.0;
        for (double v : f.values.flat()) {
            total += v * g.dx() * g.dx();
        }
        const double err = std::abs(total - exact);
        if (prev > 0.0) {
            CHECK(std::log2(prev / err) >= 1.9);
        }
        prev = err;
    }
}

TEST_CASE("field file round trip is exact") {
    CellField f(make_grid(5, {-1, 1.5, 2, 4.5}));
    double x = 0.1;
    for (auto& v : f.values.flat()) {
        v = x;
        x = x * 3.7 + 1e-17;
    }
    std::stringstream buf;
    write_field(buf, f);
    const CellField g = read_field(buf);
    CHECK(g.grid == f.grid);
    CHECK(g.values == f.values);
}

TEST_CASE("field file layout") {
    CellField f(make_grid(2, {0, 2, 0, 2}));
    f(0, 0) = 1;
    f(0, 1) = 2;
    f(1, 0) = 3;
    f(1, 1) = 4.5;
    std::stringstream buf;
    write_field(buf, f);
    CHECK(buf.str() == "# n=2 xmin=0 xmax=2 ymin=0 ymax=2\n1,1,1\n1,2,2\n2,1,3\n2,2,4.5\n");
}

TEST_CASE("read_field rejects malformed files") {
    const auto bad = [](const std::string& text) {
        std::stringstream in(text);
        CHECK_THROWS_AS(read_field(in), ConfigError);
    };
    bad("");
    bad("# n=2 xmin=0 xmax=2 ymin=0 ymax=2\n1,1,1\n1,2,2\n2,1,3\n");
    bad("# n=2 xmin=0 xmax=2 ymin=0 ymax=2\n1,1,1\n1,1,2\n2,1,3\n2,2,4\n");
    bad("# n=2 xmin=0 xmax=2 ymin=0 ymax=2\n1,1,1\n1,2,2\n2,1,3\n3,2,4\n");
    bad("# n=2 xmin=0 xmax=2 ymin=0 ymax=2\n1,1,1\n1,2,x\n2,1,3\n2,2,4\n");
    bad("# n=2 xmin=0 xmax=2 ymin=0 ymax=4\n1,1,1\n1,2,2\n2,1,3\n2,2,4\n");
    bad("# n=2 xmin=0 xmax=2 ymin=0 ymax=2\n1,1,1\n1,2,nan\n2,1,3\n2,2,4\n");
}
