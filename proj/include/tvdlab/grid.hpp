#pragma once

#include <cstddef>

#include "tvdlab/array2d.hpp"

namespace tvd {

struct Bounds {
    double xmin = -1.0;
    double xmax = 1.0;
    double ymin = -1.0;
    double ymax = 1.0;

    bool operator==(const Bounds&) const = default;
};

/// Square n x n Cartesian partition of a rectangle with uniform square cells.
///
/// Cells are addressed with zero-based (i, j), i along x and j along y. The
/// one-based convention used in field files is i_file = i + 1.
class Grid {
public:
    std::size_t n() const { return n_; }
    double dx() const { return dx_; }
    const Bounds& bounds() const { return bounds_; }

    double x_center(std::size_t i) const { return bounds_.xmin + (static_cast<double>(i) + 0.5) * dx_; }
    double y_center(std::size_t j) const { return bounds_.ymin + (static_cast<double>(j) + 0.5) * dx_; }
    double x_edge(std::size_t i) const { return bounds_.xmin + static_cast<double>(i) * dx_; }
    double y_edge(std::size_t j) const { return bounds_.ymin + static_cast<double>(j) * dx_; }

    bool operator==(const Grid&) const = default;

private:
    friend Grid make_grid(std::size_t n, const Bounds& bounds);
    Grid(std::size_t n, const Bounds& b, double dx) : n_(n), bounds_(b), dx_(dx) {}

    std::size_t n_;
    Bounds bounds_;
    double dx_;
};

/// Throws ShapeError when n < 2, the rectangle is degenerate, or the cells
/// would not be square (relative mismatch above 1e-12).
Grid make_grid(std::size_t n, const Bounds& bounds);

/// Per-cell scalar values over a grid (cell averages U_ij).
struct CellField {
    explicit CellField(const Grid& g, double init = 0.0) : grid(g), values(g.n(), g.n(), init) {}

    Grid grid;
    Array2D<double> values;

    double& operator()(std::size_t i, std::size_t j) { return values(i, j); }
    double operator()(std::size_t i, std::size_t j) const { return values(i, j); }
    std::size_t n() const { return grid.n(); }
};

/// Throws NumericalError naming the first non-finite cell.
void require_finite(const CellField& field);

}  // namespace tvd
