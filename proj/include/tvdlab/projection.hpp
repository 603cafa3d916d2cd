#pragma once

#include <functional>

#include "tvdlab/grid.hpp"
#include "tvdlab/shape.hpp"

namespace tvd {

using PointFunction = std::function<double(double, double)>;

/// Cell averages of an analytic shape.
///
/// Square pulses (any rotation) are averaged exactly from the overlap area of
/// each cell with the pulse; all other shapes use a quad_order x quad_order
/// tensor Gauss-Legendre rule per cell. Throws std::invalid_argument when
/// quad_order < 1.
CellField project_cell_averages(const ShapeSpec& spec, const Grid& grid, int quad_order = 4);

/// Tensor Gauss-Legendre cell averages of an arbitrary point function.
CellField project_cell_averages(const PointFunction& u, const Grid& grid, int quad_order = 4);

/// Exact area of the intersection of the axis-aligned box [x0,x1] x [y0,y1]
/// with the square [cx-h, cx+h] x [cy-h, cy+h] rotated counterclockwise about
/// the origin by theta.
double rotated_square_overlap(double x0, double x1, double y0, double y1, double cx, double cy,
                              double h, double theta);

}  // namespace tvd
