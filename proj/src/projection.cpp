#include "tvdlab/projection.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "tvdlab/quadrature.hpp"

namespace tvd {

namespace {

struct Point {
    double x;
    double y;
};

// Keeps the part of a convex polygon with nx*x + ny*y <= c.
std::vector<Point> clip_half_plane(const std::vector<Point>& poly, double nx, double ny, double c) {
    std::vector<Point> out;
    out.reserve(poly.size() + 1);
    for (std::size_t k = 0; k < poly.size(); ++k) {
        const Point& p = poly[k];
        const Point& q = poly[(k + 1) % poly.size()];
        const double fp = nx * p.x + ny * p.y - c;
        const double fq = nx * q.x + ny * q.y - c;
        if (fp <= 0.0) {
            out.push_back(p);
        }
        if ((fp < 0.0 && fq > 0.0) || (fp > 0.0 && fq < 0.0)) {
            const double t = fp / (fp - fq);
            out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
        }
    }
    return out;
}

double polygon_area(const std::vector<Point>& poly) {
    double twice = 0.0;
    for (std::size_t k = 0; k < poly.size(); ++k) {
        const Point& p = poly[k];
        const Point& q = poly[(k + 1) % poly.size()];
        twice += p.x * q.y - q.x * p.y;
    }
    return 0.5 * std::abs(twice);
}

double interval_overlap(double a0, double a1, double b0, double b1) {
    return std::max(0.0, std::min(a1, b1) - std::max(a0, b0));
}

CellField project_pulse(const ShapeSpec& spec, const Grid& grid) {
    CellField field(grid);
    const std::size_t n = grid.n();
    const double dx = grid.dx();
    const double h = spec.radius;
    if (spec.theta == 0.0) {
        // Separable: the overlap fraction factors into two 1D fractions.
        std::vector<double> fx(n);
        std::vector<double> fy(n);
        for (std::size_t k = 0; k < n; ++k) {
            fx[k] = interval_overlap(grid.x_edge(k), grid.x_edge(k + 1), spec.cx - h, spec.cx + h) / dx;
            fy[k] = interval_overlap(grid.y_edge(k), grid.y_edge(k + 1), spec.cy - h, spec.cy + h) / dx;
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                field(i, j) = fx[i] * fy[j];
            }
        }
        return field;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double area = rotated_square_overlap(grid.x_edge(i), grid.x_edge(i + 1), grid.y_edge(j),
                                                       grid.y_edge(j + 1), spec.cx, spec.cy, h, spec.theta);
            field(i, j) = area / (dx * dx);
        }
    }
    return field;
}

}  // namespace

double rotated_square_overlap(double x0, double x1, double y0, double y1, double cx, double cy,
                              double h, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    std::vector<Point> poly{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
    // Rotated local coordinates: xr = c x + s y, yr = -s x + c y.
    poly = clip_half_plane(poly, c, s, cx + h);
    poly = clip_half_plane(poly, -c, -s, -(cx - h));
    poly = clip_half_plane(poly, -s, c, cy + h);
    poly = clip_half_plane(poly, s, -c, -(cy - h));
    return poly.size() < 3 ? 0.0 : polygon_area(poly);
}

CellField project_cell_averages(const PointFunction& u, const Grid& grid, int quad_order) {
    if (quad_order < 1) {
        throw std::invalid_argument("quad_order must be at least 1");
    }
    const GaussRule& rule = gauss_legendre(quad_order);
    const double half = 0.5 * grid.dx();
    CellField field(grid);
    for (std::size_t i = 0; i < grid.n(); ++i) {
        const double xc = grid.x_center(i);
        for (std::size_t j = 0; j < grid.n(); ++j) {
            const double yc = grid.y_center(j);
            double sum = 0.0;
            for (int a = 0; a < quad_order; ++a) {
                for (int b = 0; b < quad_order; ++b) {
                    sum += rule.weights[a] * rule.weights[b] *
                           u(xc + half * rule.nodes[a], yc + half * rule.nodes[b]);
                }
            }
            field(i, j) = 0.25 * sum;
        }
    }
    return field;
}

CellField project_cell_averages(const ShapeSpec& spec, const Grid& grid, int quad_order) {
    if (quad_order < 1) {
        throw std::invalid_argument("quad_order must be at least 1");
    }
    spec.validate();
    if (is_discontinuous(spec)) {
        return project_pulse(spec, grid);
    }
    if (spec.kind == ShapeKind::constant) {
        return CellField(grid, spec.value);
    }
    return project_cell_averages([&spec](double x, double y) { return evaluate_shape(spec, x, y); }, grid,
                                 quad_order);
}

}  // namespace tvd
