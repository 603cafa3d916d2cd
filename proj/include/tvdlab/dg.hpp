#pragma once

#include <array>
#include <string_view>

#include "tvdlab/array2d.hpp"
#include "tvdlab/grid.hpp"
#include "tvdlab/projection.hpp"
#include "tvdlab/shape.hpp"

namespace tvd {

/// Modal coefficients of u = c00 + c10 xi + c01 eta + c11 xi eta on the
/// reference square [-1, 1]^2 of one cell.
struct Modes {
    double c00 = 0.0;
    double c10 = 0.0;
    double c01 = 0.0;
    double c11 = 0.0;

    double eval(double xi, double eta) const { return c00 + c10 * xi + c01 * eta + c11 * xi * eta; }

    Modes& operator+=(const Modes& o) {
        c00 += o.c00;
        c10 += o.c10;
        c01 += o.c01;
        c11 += o.c11;
        return *this;
    }
    friend Modes operator+(Modes a, const Modes& b) { return a += b; }
    friend Modes operator*(double s, Modes a) {
        a.c00 *= s;
        a.c10 *= s;
        a.c01 *= s;
        a.c11 *= s;
        return a;
    }
    bool operator==(const Modes&) const = default;
};

/// Diagonal of the reference mass matrix for the basis (1, xi, eta, xi eta).
inline constexpr std::array<double, 4> kReferenceMass{4.0, 4.0 / 3.0, 4.0 / 3.0, 4.0 / 9.0};

/// Degree-one tensor-product DG solution. Also used for residual rates.
struct DGState {
    explicit DGState(const Grid& g) : grid(g), coeffs(g.n(), g.n()) {}

    Grid grid;
    Array2D<Modes> coeffs;

    std::size_t n() const { return grid.n(); }
    Modes& operator()(std::size_t i, std::size_t j) { return coeffs(i, j); }
    const Modes& operator()(std::size_t i, std::size_t j) const { return coeffs(i, j); }
};

enum class FluxKind {
    /// Solid-body rotation a = (-2 pi y, 2 pi x), one turn per unit time.
    rotation,
    /// The saddle field a = (2 pi x, -2 pi y); comparison only.
    saddle,
    /// Constant velocity (ax, ay).
    uniform,
    /// f = g = u^2 / 2.
    burgers,
};

std::string_view to_string(FluxKind kind);

struct FluxModel {
    FluxKind kind = FluxKind::rotation;
    double ax = 0.0;
    double ay = 0.0;

    static FluxModel rotation() { return {FluxKind::rotation}; }
    static FluxModel saddle() { return {FluxKind::saddle}; }
    static FluxModel uniform(double ax, double ay) { return {FluxKind::uniform, ax, ay}; }
    static FluxModel burgers() { return {FluxKind::burgers}; }

    bool is_linear() const { return kind != FluxKind::burgers; }
    /// Advection velocity for the linear kinds.
    std::array<double, 2> velocity(double x, double y) const;
};

/// L2 projection onto the cell basis with a 4x4 Gauss rule per cell.
DGState project_dg(const ShapeSpec& spec, const Grid& grid);
DGState project_dg(const PointFunction& u, const Grid& grid);

/// Semi-discrete right-hand side dU/dt = M^-1 (volume - surface).
///
/// Volume terms use 2x2 Gauss points; each edge uses 2 Gauss points with
/// pointwise upwinding (linear kinds) or the Rusanov flux (Burgers). Boundary
/// edges take the exterior trace equal to the interior trace. Throws
/// NumericalError naming the first cell with a non-finite rate.
DGState spatial_residual(const DGState& state, const FluxModel& flux);

/// cfl * dx / lambda_max with lambda_max = max over cell centres of |a1| + |a2|
/// (linear) or 2 max |u| (Burgers). Returns t_cap when that is smaller or when
/// lambda_max vanishes. Throws std::invalid_argument unless 0 < cfl < 1.
double compute_dt(const DGState& state, const FluxModel& flux, double cfl, double t_cap);

/// Heun (trapezoidal predictor-corrector) step; the moment limiter with the
/// given alpha is applied after each stage when limiter_on.
DGState heun_step(const DGState& state, const FluxModel& flux, double dt, bool limiter_on,
                  double limiter_alpha = 0.5);

/// Field of c00.
CellField cell_means(const DGState& state);

/// sum over cells of the integral of |u_h - u_exact| (4x4 Gauss per cell).
double l1_error(const DGState& state, const ShapeSpec& exact);
double l1_error(const DGState& state, const PointFunction& exact);

/// Exact solution of the rotation problem at time t: the initial shape turned
/// counterclockwise by 2 pi t.
ShapeSpec rotated_exact(const ShapeSpec& initial, double t);

/// sum c00 * dx^2.
double total_mass(const DGState& state);

}  // namespace tvd
