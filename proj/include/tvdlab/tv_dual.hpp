#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>

#include "tvdlab/array2d.hpp"
#include "tvdlab/grid.hpp"

namespace tvd {

/// Discrete test function / edge residual on a square grid.
///
/// `h(I, j)` sits at the midpoint of vertical edge I (I = 0..n, between cells
/// I-1 and I) in cell row j; `v(i, J)` sits at the midpoint of horizontal edge
/// J (J = 0..n) in cell column i. Boundary entries h(0, j), h(n, j), v(i, 0),
/// v(i, n) are the zero normal trace and stay zero.
struct EdgeVectorField {
    explicit EdgeVectorField(std::size_t n) : h(n + 1, n), v(n, n + 1) {}

    std::size_t n() const { return v.nx(); }

    Array2D<double> h;
    Array2D<double> v;
};

/// Two-component vector values on one node set.
struct VectorNodes {
    VectorNodes() = default;
    VectorNodes(std::size_t nx, std::size_t ny) : x(nx, ny), y(nx, ny) {}

    Array2D<double> x;
    Array2D<double> y;
};

/// Gradient field v = (v1, v2, v3) on vertical-edge midpoints, horizontal-edge
/// midpoints and cell centres.
struct GradField {
    explicit GradField(std::size_t n) : v1(n + 1, n), v2(n, n + 1), v3(n, n) {}

    VectorNodes& part(int k) { return k == 1 ? v1 : (k == 2 ? v2 : v3); }
    const VectorNodes& part(int k) const { return k == 1 ? v1 : (k == 2 ? v2 : v3); }

    VectorNodes v1;
    VectorNodes v2;
    VectorNodes v3;
};

/// Which magnitude drives the shrinkage in the v update.
enum class ShrinkRule {
    /// Proximal step: threshold the freshly updated argument.
    updated_argument,
    /// Literal reading that thresholds by the previous iterate |v^n_k|. Kept
    /// for comparison; it freezes nodes that ever reach zero.
    previous_iterate,
};

struct DualTvParams {
    double mu = 0.5;
    double gamma = 0.33;
    double epsilon = 1e-7;
    std::size_t max_iter = 20000;
    /// Convergence also requires max |F v - DU| <= feasibility_tol * max |DU|.
    /// Zero leaves the norm-change test alone, which can stop on a stalled
    /// iterate (e.g. v shrunk to zero on low-amplitude data).
    double feasibility_tol = 1e-3;
    ShrinkRule shrink_rule = ShrinkRule::updated_argument;
    /// Optional (v, phi) starting point, e.g. from the previous time step.
    std::optional<std::pair<GradField, EdgeVectorField>> warm_start;

    /// Throws ConfigError for non-positive mu/gamma/epsilon/max_iter or a
    /// negative feasibility_tol.
    void validate() const;
};

/// Mu tuned per mesh size: 0.5 / 0.3 / 0.1 / 0.05 for n = 20 / 40 / 80 / 160,
/// nearest tabulated n otherwise.
double default_mu(std::size_t n);

struct DualTvResult {
    /// dx * primal_norm.
    double value = 0.0;
    std::size_t iterations = 0;
    /// ||v||_{1,1,2}: sum of Euclidean norms over all three node sets.
    double primal_norm = 0.0;
    /// dx * sum <DU, phi>.
    double dual_objective = 0.0;
    /// max |F v - DU|.
    double feasibility_residual = 0.0;
    bool converged = false;
    GradField v{0};
    EdgeVectorField phi{0};
};

struct DualTvTraceRow {
    std::size_t iteration;
    double primal_norm;
    double dual_objective;
    double residual;
};

using DualTvTrace = std::function<void(const DualTvTraceRow&)>;

/// D U: forward differences on interior edges, zero on the boundary.
EdgeVectorField forward_differences(const CellField& field);

/// Interpolation of an edge field to full 2-vectors on node set k (1: vertical
/// edges, 2: horizontal edges, 3: cell centres). Neighbours outside the grid
/// contribute zero. Throws std::invalid_argument for k outside 1..3.
VectorNodes apply_P(int k, const EdgeVectorField& phi);

/// F v, the adjoint of the stacked interpolations restricted to zero-trace
/// edge fields. Boundary entries of the result are zero.
EdgeVectorField apply_F(const GradField& v);

/// w * (1 - 1 / max(|w| / threshold, 1)).
std::array<double, 2> vector_shrink(std::array<double, 2> w, double threshold);

/// ||v||_{1,1,2}.
double mixed_norm(const GradField& v);

/// Discrete dual total variation by the alternating proximal gradient method.
///
/// Starts from v = ((D1 U, 0), (0, D2 U), (0, 0)), phi = 0 (or the warm
/// start), and iterates
///   r   = DU - F v + mu phi
///   v_k = shrink(v_k + gamma P^k r, gamma mu)     k = 1, 2, 3
///   phi = phi + (DU - F v) / mu
/// until | ||v||_new - ||v||_old | <= epsilon and the feasibility bound
/// holds (see DualTvParams::feasibility_tol). Reaching max_iter returns an
/// unconverged result; a non-finite iterate throws NumericalError.
DualTvResult tv_dual(const CellField& field, const DualTvParams& params, const DualTvTrace& trace = {});

struct MuSearchResult {
    double mu;
    double delta;
    double tv;
};

/// Direct search over mu = step, 2 step, ... < 1 minimising |TV_d - reference|.
MuSearchResult mu_search(const CellField& field, double tv_reference, double step,
                         const DualTvParams& base = {});

}  // namespace tvd
