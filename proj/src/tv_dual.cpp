#include "tvdlab/tv_dual.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tvdlab/errors.hpp"
#include "tvdlab/summation.hpp"

namespace tvd {

void DualTvParams::validate() const {
    if (!(mu > 0.0) || !(gamma > 0.0) || !(epsilon > 0.0) || max_iter == 0) {
        throw ConfigError("dual TV parameters: mu, gamma, epsilon and max_iter must be positive");
    }
    if (!(feasibility_tol >= 0.0) || !std::isfinite(feasibility_tol)) {
        throw ConfigError("dual TV parameters: feasibility_tol must be finite and non-negative");
    }
}

double default_mu(std::size_t n) {
    constexpr std::array<std::pair<std::size_t, double>, 4> table{{{20, 0.5}, {40, 0.3}, {80, 0.1}, {160, 0.05}}};
    double best = table[0].second;
    double best_dist = INFINITY;
    for (const auto& [size, mu] : table) {
        const double dist = std::abs(std::log(static_cast<double>(n) / static_cast<double>(size)));
        if (dist < best_dist) {
            best_dist = dist;
            best = mu;
        }
    }
    return best;
}

EdgeVectorField forward_differences(const CellField& field) {
    const std::size_t n = field.n();
    EdgeVectorField du(n);
    for (std::size_t e = 1; e < n; ++e) {
        for (std::size_t c = 0; c < n; ++c) {
            du.h(e, c) = field(e, c) - field(e - 1, c);
            du.v(c, e) = field(c, e) - field(c, e - 1);
        }
    }
    return du;
}

namespace {

// Zero outside the index box.
double at(const Array2D<double>& a, std::ptrdiff_t i, std::ptrdiff_t j) {
    if (i < 0 || j < 0 || i >= static_cast<std::ptrdiff_t>(a.nx()) || j >= static_cast<std::ptrdiff_t>(a.ny())) {
        return 0.0;
    }
    return a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
}

// Mean of psi on the four horizontal edges around vertical edge (I, j).
double psi_at_vertical_edge(const Array2D<double>& psi, std::ptrdiff_t I, std::ptrdiff_t j) {
    return 0.25 * (at(psi, I - 1, j) + at(psi, I - 1, j + 1) + at(psi, I, j) + at(psi, I, j + 1));
}

// Mean of phi on the four vertical edges around horizontal edge (i, J).
double phi_at_horizontal_edge(const Array2D<double>& phi, std::ptrdiff_t i, std::ptrdiff_t J) {
    return 0.25 * (at(phi, i, J - 1) + at(phi, i, J) + at(phi, i + 1, J - 1) + at(phi, i + 1, J));
}

// Scatter helpers for the adjoint: add `value` to a(i, j) when in range.
void add_at(Array2D<double>& a, std::ptrdiff_t i, std::ptrdiff_t j, double value) {
    if (i < 0 || j < 0 || i >= static_cast<std::ptrdiff_t>(a.nx()) || j >= static_cast<std::ptrdiff_t>(a.ny())) {
        return;
    }
    a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) += value;
}

void zero_trace(EdgeVectorField& f) {
    const std::size_t n = f.n();
    for (std::size_t c = 0; c < n; ++c) {
        f.h(0, c) = 0.0;
        f.h(n, c) = 0.0;
        f.v(c, 0) = 0.0;
        f.v(c, n) = 0.0;
    }
}

using Idx = std::ptrdiff_t;

}  // namespace

VectorNodes apply_P(int k, const EdgeVectorField& phi) {
    const std::size_t n = phi.n();
    switch (k) {
        case 1: {
            VectorNodes out(n + 1, n);
            for (std::size_t I = 0; I <= n; ++I) {
                for (std::size_t j = 0; j < n; ++j) {
                    out.x(I, j) = phi.h(I, j);
                    out.y(I, j) = psi_at_vertical_edge(phi.v, static_cast<Idx>(I), static_cast<Idx>(j));
                }
            }
            return out;
        }
        case 2: {
            VectorNodes out(n, n + 1);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t J = 0; J <= n; ++J) {
                    out.x(i, J) = phi_at_horizontal_edge(phi.h, static_cast<Idx>(i), static_cast<Idx>(J));
                    out.y(i, J) = phi.v(i, J);
                }
            }
            return out;
        }
        case 3: {
            VectorNodes out(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    out.x(i, j) = 0.5 * (phi.h(i, j) + phi.h(i + 1, j));
                    out.y(i, j) = 0.5 * (phi.v(i, j) + phi.v(i, j + 1));
                }
            }
            return out;
        }
        default:
            throw std::invalid_argument("interpolation index k must be 1, 2 or 3");
    }
}

EdgeVectorField apply_F(const GradField& v) {
    const std::size_t n = v.v3.x.nx();
    EdgeVectorField out(n);
    // v1: identity on h, quarter-spread of the y component onto v.
    for (std::size_t I = 0; I <= n; ++I) {
        for (std::size_t j = 0; j < n; ++j) {
            out.h(I, j) += v.v1.x(I, j);
            const double q = 0.25 * v.v1.y(I, j);
            const Idx ii = static_cast<Idx>(I);
            const Idx jj = static_cast<Idx>(j);
            add_at(out.v, ii - 1, jj, q);
            add_at(out.v, ii - 1, jj + 1, q);
            add_at(out.v, ii, jj, q);
            add_at(out.v, ii, jj + 1, q);
        }
    }
    // v2: identity on v, quarter-spread of the x component onto h.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t J = 0; J <= n; ++J) {
            out.v(i, J) += v.v2.y(i, J);
            const double q = 0.25 * v.v2.x(i, J);
            const Idx ii = static_cast<Idx>(i);
            const Idx JJ = static_cast<Idx>(J);
            add_at(out.h, ii, JJ - 1, q);
            add_at(out.h, ii, JJ, q);
            add_at(out.h, ii + 1, JJ - 1, q);
            add_at(out.h, ii + 1, JJ, q);
        }
    }
    // v3: half-spread onto the two adjacent edges in each direction.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double hx = 0.5 * v.v3.x(i, j);
            const double hy = 0.5 * v.v3.y(i, j);
            out.h(i, j) += hx;
            out.h(i + 1, j) += hx;
            out.v(i, j) += hy;
            out.v(i, j + 1) += hy;
        }
    }
    zero_trace(out);
    return out;
}

std::array<double, 2> vector_shrink(std::array<double, 2> w, double threshold) {
    const double norm = std::hypot(w[0], w[1]);
    const double factor = 1.0 - 1.0 / std::max(norm / threshold, 1.0);
    return {w[0] * factor, w[1] * factor};
}

double mixed_norm(const GradField& v) {
    CompensatedSum sum;
    for (int k = 1; k <= 3; ++k) {
        const VectorNodes& p = v.part(k);
        const auto xs = p.x.flat();
        const auto ys = p.y.flat();
        for (std::size_t m = 0; m < xs.size(); ++m) {
            sum.add(std::hypot(xs[m], ys[m]));
        }
    }
    return sum.value();
}

namespace {

double inner(const EdgeVectorField& a, const EdgeVectorField& b) {
    CompensatedSum sum;
    const auto ah = a.h.flat();
    const auto bh = b.h.flat();
    for (std::size_t m = 0; m < ah.size(); ++m) {
        sum.add(ah[m] * bh[m]);
    }
    const auto av = a.v.flat();
    const auto bv = b.v.flat();
    for (std::size_t m = 0; m < av.size(); ++m) {
        sum.add(av[m] * bv[m]);
    }
    return sum.value();
}

// max |a - b| over both components.
double max_abs_diff(const EdgeVectorField& a, const EdgeVectorField& b) {
    double out = 0.0;
    const auto ah = a.h.flat();
    const auto bh = b.h.flat();
    for (std::size_t m = 0; m < ah.size(); ++m) {
        out = std::max(out, std::abs(ah[m] - bh[m]));
    }
    const auto av = a.v.flat();
    const auto bv = b.v.flat();
    for (std::size_t m = 0; m < av.size(); ++m) {
        out = std::max(out, std::abs(av[m] - bv[m]));
    }
    return out;
}

void update_part(VectorNodes& vk, const VectorNodes& pk, double gamma, double threshold, ShrinkRule rule) {
    auto xs = vk.x.flat();
    auto ys = vk.y.flat();
    const auto px = pk.x.flat();
    const auto py = pk.y.flat();
    for (std::size_t m = 0; m < xs.size(); ++m) {
        const std::array<double, 2> arg{xs[m] + gamma * px[m], ys[m] + gamma * py[m]};
        if (rule == ShrinkRule::updated_argument) {
            const auto s = vector_shrink(arg, threshold);
            xs[m] = s[0];
            ys[m] = s[1];
        } else {
            const double prev = std::hypot(xs[m], ys[m]);
            const double factor = 1.0 - 1.0 / std::max(prev / threshold, 1.0);
            xs[m] = arg[0] * factor;
            ys[m] = arg[1] * factor;
        }
    }
}

}  // namespace

DualTvResult tv_dual(const CellField& field, const DualTvParams& params, const DualTvTrace& trace) {
    params.validate();
    require_finite(field);
    const std::size_t n = field.n();
    const double dx = field.grid.dx();
    const EdgeVectorField du = forward_differences(field);

    DualTvResult result;
    result.v = GradField(n);
    result.phi = EdgeVectorField(n);
    GradField& v = result.v;
    EdgeVectorField& phi = result.phi;
    if (params.warm_start && params.warm_start->second.n() == n) {
        v = params.warm_start->first;
        phi = params.warm_start->second;
    } else {
        v.v1.x = du.h;
        v.v2.y = du.v;
    }

    const double threshold = params.gamma * params.mu;
    double du_max = 0.0;
    for (const auto* a : {&du.h, &du.v}) {
        for (double x : a->flat()) {
            du_max = std::max(du_max, std::abs(x));
        }
    }
    const double feasibility_bound = params.feasibility_tol * du_max;
    double norm_old = mixed_norm(v);
    EdgeVectorField fv = apply_F(v);
    EdgeVectorField r(n);

    for (std::size_t it = 1; it <= params.max_iter; ++it) {
        // r = DU - F v + mu phi
        {
            auto rh = r.h.flat();
            auto rv = r.v.flat();
            const auto dh = du.h.flat();
            const auto dv = du.v.flat();
            const auto fh = fv.h.flat();
            const auto fvv = fv.v.flat();
            const auto ph = phi.h.flat();
            const auto pv = phi.v.flat();
            for (std::size_t m = 0; m < rh.size(); ++m) {
                rh[m] = dh[m] - fh[m] + params.mu * ph[m];
            }
            for (std::size_t m = 0; m < rv.size(); ++m) {
                rv[m] = dv[m] - fvv[m] + params.mu * pv[m];
            }
        }
        for (int k = 1; k <= 3; ++k) {
            update_part(v.part(k), apply_P(k, r), params.gamma, threshold, params.shrink_rule);
        }
        fv = apply_F(v);
        {
            auto ph = phi.h.flat();
            auto pv = phi.v.flat();
            const auto dh = du.h.flat();
            const auto dv = du.v.flat();
            const auto fh = fv.h.flat();
            const auto fvv = fv.v.flat();
            for (std::size_t m = 0; m < ph.size(); ++m) {
                ph[m] += (dh[m] - fh[m]) / params.mu;
            }
            for (std::size_t m = 0; m < pv.size(); ++m) {
                pv[m] += (dv[m] - fvv[m]) / params.mu;
            }
        }

        const double norm_new = mixed_norm(v);
        if (!std::isfinite(norm_new)) {
            std::ostringstream msg;
            msg << "dual TV iterate became non-finite at iteration " << it;
            throw NumericalError(msg.str());
        }
        if (trace) {
            trace({it, norm_new, dx * inner(du, phi), max_abs_diff(fv, du)});
        }
        result.iterations = it;
        const bool done = std::abs(norm_new - norm_old) <= params.epsilon &&
                          (params.feasibility_tol == 0.0 || max_abs_diff(fv, du) <= feasibility_bound);
        norm_old = norm_new;
        if (done) {
            result.converged = true;
            break;
        }
    }

    result.primal_norm = norm_old;
    result.value = dx * result.primal_norm;
    result.dual_objective = dx * inner(du, phi);
    result.feasibility_residual = max_abs_diff(fv, du);
    return result;
}

MuSearchResult mu_search(const CellField& field, double tv_reference, double step, const DualTvParams& base) {
    if (!(step > 0.0) || !(step < 1.0)) {
        throw std::invalid_argument("mu search step must lie in (0, 1)");
    }
    MuSearchResult best{0.0, INFINITY, 0.0};
    for (std::size_t k = 1;; ++k) {
        const double mu = static_cast<double>(k) * step;
        if (mu >= 1.0 - 1e-12) {
            break;
        }
        DualTvParams params = base;
        params.mu = mu;
        params.warm_start.reset();
        const double tv = tv_dual(field, params).value;
        const double delta = std::abs(tv - tv_reference);
        if (delta < best.delta) {
            best = {mu, delta, tv};
        }
    }
    return best;
}

}  // namespace tvd
