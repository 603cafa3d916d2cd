#include "tvdlab/grid.hpp"

#include <cmath>
#include <sstream>

#include "tvdlab/errors.hpp"

namespace tvd {

Grid make_grid(std::size_t n, const Bounds& bounds) {
    if (n < 2) {
        throw ShapeError("grid needs at least 2 cells per side, got " + std::to_string(n));
    }
    const double wx = bounds.xmax - bounds.xmin;
    const double wy = bounds.ymax - bounds.ymin;
    if (!(wx > 0.0) || !(wy > 0.0) || !std::isfinite(wx) || !std::isfinite(wy)) {
        throw ShapeError("grid bounds must describe a non-degenerate finite rectangle");
    }
    if (std::abs(wx - wy) > 1e-12 * std::max(wx, wy)) {
        std::ostringstream msg;
        msg << "cells are not square: dx = " << wx / static_cast<double>(n)
            << ", dy = " << wy / static_cast<double>(n);
        throw ShapeError(msg.str());
    }
    return Grid(n, bounds, wx / static_cast<double>(n));
}

void require_finite(const CellField& field) {
    for (std::size_t i = 0; i < field.n(); ++i) {
        for (std::size_t j = 0; j < field.n(); ++j) {
            if (!std::isfinite(field(i, j))) {
                std::ostringstream msg;
                msg << "non-finite cell value at (" << i + 1 << ", " << j + 1 << ")";
                throw NumericalError(msg.str());
            }
        }
    }
}

}  // namespace tvd
