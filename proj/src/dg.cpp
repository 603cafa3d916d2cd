#include "tvdlab/dg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "tvdlab/errors.hpp"
#include "tvdlab/limiter.hpp"
#include "tvdlab/quadrature.hpp"
#include "tvdlab/summation.hpp"

namespace tvd {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Two-point Gauss nodes; weights are 1.
constexpr double kG = 0.57735026918962576451;
constexpr std::array<double, 2> kGauss2{-kG, kG};

double numerical_flux(const FluxModel& flux, double normal_speed, double u_minus, double u_plus) {
    if (flux.is_linear()) {
        return normal_speed * (normal_speed >= 0.0 ? u_minus : u_plus);
    }
    const double f_minus = 0.5 * u_minus * u_minus;
    const double f_plus = 0.5 * u_plus * u_plus;
    const double speed = std::max(std::abs(u_minus), std::abs(u_plus));
    return 0.5 * (f_minus + f_plus) - 0.5 * speed * (u_plus - u_minus);
}

}  // namespace

std::string_view to_string(FluxKind kind) {
    switch (kind) {
        case FluxKind::rotation:
            return "rotation";
        case FluxKind::saddle:
            return "saddle";
        case FluxKind::uniform:
            return "uniform";
        case FluxKind::burgers:
            return "burgers";
    }
    return "unknown";
}

std::array<double, 2> FluxModel::velocity(double x, double y) const {
    switch (kind) {
        case FluxKind::rotation:
            return {-kTwoPi * y, kTwoPi * x};
        case FluxKind::saddle:
            return {kTwoPi * x, -kTwoPi * y};
        case FluxKind::uniform:
            return {ax, ay};
        case FluxKind::burgers:
            break;
    }
    return {0.0, 0.0};
}

DGState project_dg(const PointFunction& u, const Grid& grid) {
    const GaussRule& rule = gauss_legendre(4);
    const double half = 0.5 * grid.dx();
    DGState state(grid);
    for (std::size_t i = 0; i < grid.n(); ++i) {
        const double xc = grid.x_center(i);
        for (std::size_t j = 0; j < grid.n(); ++j) {
            const double yc = grid.y_center(j);
            std::array<double, 4> moments{};
            for (int a = 0; a < 4; ++a) {
                const double xi = rule.nodes[a];
                for (int b = 0; b < 4; ++b) {
                    const double eta = rule.nodes[b];
                    const double wu = rule.weights[a] * rule.weights[b] * u(xc + half * xi, yc + half * eta);
                    moments[0] += wu;
                    moments[1] += wu * xi;
                    moments[2] += wu * eta;
                    moments[3] += wu * xi * eta;
                }
            }
            state(i, j) = {moments[0] / kReferenceMass[0], moments[1] / kReferenceMass[1],
                           moments[2] / kReferenceMass[2], moments[3] / kReferenceMass[3]};
        }
    }
    return state;
}

DGState project_dg(const ShapeSpec& spec, const Grid& grid) {
    spec.validate();
    return project_dg([&spec](double x, double y) { return evaluate_shape(spec, x, y); }, grid);
}

DGState spatial_residual(const DGState& state, const FluxModel& flux) {
    const std::size_t n = state.n();
    const Grid& grid = state.grid;
    const double dx = grid.dx();
    const double half = 0.5 * dx;
    // Accumulate reference-space integrals; scaled to rates at the end.
    Array2D<std::array<double, 4>> acc(n, n, std::array<double, 4>{});

    // Volume terms: integral of f dphi/dxi + g dphi/deta.
    for (std::size_t i = 0; i < n; ++i) {
        const double xc = grid.x_center(i);
        for (std::size_t j = 0; j < n; ++j) {
            const double yc = grid.y_center(j);
            const Modes& m = state(i, j);
            auto& r = acc(i, j);
            for (double xi : kGauss2) {
                for (double eta : kGauss2) {
                    const double u = m.eval(xi, eta);
                    double f = 0.0;
                    double g = 0.0;
                    if (flux.is_linear()) {
                        const auto a = flux.velocity(xc + half * xi, yc + half * eta);
                        f = a[0] * u;
                        g = a[1] * u;
                    } else {
                        f = 0.5 * u * u;
                        g = f;
                    }
                    r[1] += f;
                    r[2] += g;
                    r[3] += f * eta + g * xi;
                }
            }
        }
    }

    // Vertical edges: e = 0..n between cells e-1 (left) and e (right).
    for (std::size_t e = 0; e <= n; ++e) {
        const double xe = grid.x_edge(e);
        for (std::size_t j = 0; j < n; ++j) {
            const double yc = grid.y_center(j);
            const Modes* left = e > 0 ? &state(e - 1, j) : nullptr;
            const Modes* right = e < n ? &state(e, j) : nullptr;
            for (double eta : kGauss2) {
                const double u_left = left ? left->eval(1.0, eta) : right->eval(-1.0, eta);
                const double u_right = right ? right->eval(-1.0, eta) : u_left;
                const double speed = flux.is_linear() ? flux.velocity(xe, yc + half * eta)[0] : 0.0;
                const double fhat = numerical_flux(flux, speed, u_left, u_right);
                if (left) {
                    auto& r = acc(e - 1, j);
                    r[0] -= fhat;
                    r[1] -= fhat;
                    r[2] -= fhat * eta;
                    r[3] -= fhat * eta;
                }
                if (right) {
                    auto& r = acc(e, j);
                    r[0] += fhat;
                    r[1] -= fhat;
                    r[2] += fhat * eta;
                    r[3] -= fhat * eta;
                }
            }
        }
    }

    // Horizontal edges: e = 0..n between cells e-1 (below) and e (above).
    for (std::size_t i = 0; i < n; ++i) {
        const double xc = grid.x_center(i);
        for (std::size_t e = 0; e <= n; ++e) {
            const double ye = grid.y_edge(e);
            const Modes* below = e > 0 ? &state(i, e - 1) : nullptr;
            const Modes* above = e < n ? &state(i, e) : nullptr;
            for (double xi : kGauss2) {
                const double u_below = below ? below->eval(xi, 1.0) : above->eval(xi, -1.0);
                const double u_above = above ? above->eval(xi, -1.0) : u_below;
                const double speed = flux.is_linear() ? flux.velocity(xc + half * xi, ye)[1] : 0.0;
                const double ghat = numerical_flux(flux, speed, u_below, u_above);
                if (below) {
                    auto& r = acc(i, e - 1);
                    r[0] -= ghat;
                    r[1] -= ghat * xi;
                    r[2] -= ghat;
                    r[3] -= ghat * xi;
                }
                if (above) {
                    auto& r = acc(i, e);
                    r[0] += ghat;
                    r[1] += ghat * xi;
                    r[2] -= ghat;
                    r[3] -= ghat * xi;
                }
            }
        }
    }

    DGState rates(grid);
    const double scale = 2.0 / dx;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto& r = acc(i, j);
            Modes& out = rates(i, j);
            out.c00 = scale * r[0] / kReferenceMass[0];
            out.c10 = scale * r[1] / kReferenceMass[1];
            out.c01 = scale * r[2] / kReferenceMass[2];
            out.c11 = scale * r[3] / kReferenceMass[3];
            if (!std::isfinite(out.c00) || !std::isfinite(out.c10) || !std::isfinite(out.c01) ||
                !std::isfinite(out.c11)) {
                std::ostringstream msg;
                msg << "non-finite DG rate in cell (" << i + 1 << ", " << j + 1 << ")";
                throw NumericalError(msg.str());
            }
        }
    }
    return rates;
}

double compute_dt(const DGState& state, const FluxModel& flux, double cfl, double t_cap) {
    if (!(cfl > 0.0) || !(cfl < 1.0)) {
        throw std::invalid_argument("cfl must lie in (0, 1)");
    }
    const Grid& grid = state.grid;
    double lambda = 0.0;
    for (std::size_t i = 0; i < grid.n(); ++i) {
        for (std::size_t j = 0; j < grid.n(); ++j) {
            if (flux.is_linear()) {
                const auto a = flux.velocity(grid.x_center(i), grid.y_center(j));
                lambda = std::max(lambda, std::abs(a[0]) + std::abs(a[1]));
            } else {
                const Modes& m = state(i, j);
                const double umax = std::abs(m.c00) + std::abs(m.c10) + std::abs(m.c01) + std::abs(m.c11);
                lambda = std::max(lambda, 2.0 * umax);
            }
        }
    }
    constexpr double kTinySpeed = 1e-14;
    if (lambda <= kTinySpeed) {
        return t_cap;
    }
    return std::min(cfl * grid.dx() / lambda, t_cap);
}

DGState heun_step(const DGState& state, const FluxModel& flux, double dt, bool limiter_on, double limiter_alpha) {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("time step must be positive");
    }
    const std::size_t n = state.n();
    const DGState k1 = spatial_residual(state, flux);
    DGState stage(state.grid);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            stage(i, j) = state(i, j) + dt * k1(i, j);
        }
    }
    if (limiter_on) {
        stage = moment_limit(stage, limiter_alpha);
    }
    const DGState k2 = spatial_residual(stage, flux);
    DGState next(state.grid);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            next(i, j) = 0.5 * (state(i, j) + stage(i, j) + dt * k2(i, j));
        }
    }
    if (limiter_on) {
        next = moment_limit(next, limiter_alpha);
    }
    return next;
}

CellField cell_means(const DGState& state) {
    CellField field(state.grid);
    for (std::size_t i = 0; i < state.n(); ++i) {
        for (std::size_t j = 0; j < state.n(); ++j) {
            field(i, j) = state(i, j).c00;
        }
    }
    return field;
}

double l1_error(const DGState& state, const PointFunction& exact) {
    const GaussRule& rule = gauss_legendre(4);
    const Grid& grid = state.grid;
    const double half = 0.5 * grid.dx();
    CompensatedSum sum;
    for (std::size_t i = 0; i < grid.n(); ++i) {
        const double xc = grid.x_center(i);
        for (std::size_t j = 0; j < grid.n(); ++j) {
            const double yc = grid.y_center(j);
            const Modes& m = state(i, j);
            double cell = 0.0;
            for (int a = 0; a < 4; ++a) {
                for (int b = 0; b < 4; ++b) {
                    const double xi = rule.nodes[a];
                    const double eta = rule.nodes[b];
                    cell += rule.weights[a] * rule.weights[b] *
                            std::abs(m.eval(xi, eta) - exact(xc + half * xi, yc + half * eta));
                }
            }
            sum.add(cell * half * half);
        }
    }
    return sum.value();
}

double l1_error(const DGState& state, const ShapeSpec& exact) {
    return l1_error(state, [&exact](double x, double y) { return evaluate_shape(exact, x, y); });
}

ShapeSpec rotated_exact(const ShapeSpec& initial, double t) {
    return initial.rotated(kTwoPi * t);
}

double total_mass(const DGState& state) {
    CompensatedSum sum;
    for (std::size_t i = 0; i < state.n(); ++i) {
        for (std::size_t j = 0; j < state.n(); ++j) {
            sum.add(state(i, j).c00);
        }
    }
    return sum.value() * state.grid.dx() * state.grid.dx();
}

}  // namespace tvd
