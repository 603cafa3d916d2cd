#include "tvdlab/simulation.hpp"

#include <algorithm>
#include <cmath>

#include "tvdlab/errors.hpp"

namespace tvd {

void RunConfig::validate() const {
    if (!(t_final > 0.0) || !std::isfinite(t_final)) {
        throw ConfigError("t_final must be positive");
    }
    if (!(cfl > 0.0) || !(cfl < 1.0)) {
        throw ConfigError("cfl must lie in (0, 1)");
    }
    if (n < 2) {
        throw ConfigError("n must be at least 2");
    }
    if (tv_stride == 0) {
        throw ConfigError("tv.stride must be positive");
    }
    if (!(limiter_alpha > 0.0) || !(limiter_alpha <= 1.0)) {
        throw ConfigError("limiter alpha must lie in (0, 1]");
    }
    for (double t : snapshot_times) {
        if (!(t > 0.0) || t > t_final) {
            throw ConfigError("snapshot times must lie in (0, t_final]");
        }
    }
    shape.validate();
    dual.validate();
}

RunSummary simulate(const RunConfig& config, const StepObserver& observer) {
    config.validate();
    const Grid grid = make_grid(config.n, config.domain);

    std::vector<double> stops = config.snapshot_times;
    stops.push_back(config.t_final);
    std::sort(stops.begin(), stops.end());
    stops.erase(std::unique(stops.begin(), stops.end()), stops.end());
    const auto is_snapshot = [&](double t) {
        return std::find(config.snapshot_times.begin(), config.snapshot_times.end(), t) !=
               config.snapshot_times.end();
    };

    RunSummary summary{project_dg(config.shape, grid)};
    DGState& state = summary.final_state;
    if (observer) {
        observer({0, 0.0, 0.0, false, state});
    }

    double t = 0.0;
    summary.dt_min = INFINITY;
    for (double stop : stops) {
        const double segment = stop - t;
        if (segment <= 0.0) {
            continue;
        }
        const double dt_cfl = compute_dt(state, config.flux, config.cfl, segment);
        const auto count = static_cast<std::size_t>(std::ceil(segment / dt_cfl * (1.0 - 1e-12)));
        const std::size_t steps = std::max<std::size_t>(count, 1);
        const double dt = segment / static_cast<double>(steps);
        const double t0 = t;
        for (std::size_t k = 1; k <= steps; ++k) {
            state = heun_step(state, config.flux, dt, config.limiter_on, config.limiter_alpha);
            ++summary.steps;
            // Land exactly on the stop to keep snapshot times bit-identical.
            t = k == steps ? stop : t0 + static_cast<double>(k) * dt;
            summary.dt_min = std::min(summary.dt_min, dt);
            summary.dt_max = std::max(summary.dt_max, dt);
            if (observer) {
                observer({summary.steps, t, dt, k == steps && is_snapshot(stop), state});
            }
        }
    }
    summary.t = t;
    return summary;
}

}  // namespace tvd
