#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "tvdlab/dg.hpp"
#include "tvdlab/tv_dual.hpp"

namespace tvd {

struct RunConfig {
    FluxModel flux = FluxModel::rotation();
    ShapeSpec shape = ShapeSpec::cosine_hill();
    std::size_t n = 80;
    Bounds domain{};
    double cfl = 0.2;
    double t_final = 0.125;
    bool limiter_on = true;
    double limiter_alpha = 0.5;
    /// TV is evaluated at every step up to dense_steps, then every tv_stride
    /// steps, and always at snapshot times.
    std::size_t tv_stride = 10;
    std::size_t dense_steps = 20;
    DualTvParams dual{};
    /// Reuse the previous dual solution as the starting point.
    bool warm_start = false;
    /// Times (in (0, t_final]) the integration must land on exactly.
    std::vector<double> snapshot_times;

    /// Throws ConfigError on t_final <= 0, cfl outside (0, 1), n < 2,
    /// tv_stride == 0 or snapshot times outside (0, t_final].
    void validate() const;
};

struct StepInfo {
    std::size_t step;
    double t;
    /// Step just taken; 0 for the initial state.
    double dt;
    bool at_snapshot;
    const DGState& state;
};

using StepObserver = std::function<void(const StepInfo&)>;

struct RunSummary {
    DGState final_state;
    std::size_t steps = 0;
    double t = 0.0;
    double dt_min = 0.0;
    double dt_max = 0.0;
};

/// Integrates from the projected initial shape to t_final. Between
/// consecutive stop times (snapshots and t_final) the step is uniform,
/// segment / ceil(segment / dt_cfl) with dt_cfl from the state at the start
/// of the segment. The observer sees the initial state and every step.
RunSummary simulate(const RunConfig& config, const StepObserver& observer = {});

}  // namespace tvd
