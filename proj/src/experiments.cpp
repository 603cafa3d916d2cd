#include "tvdlab/experiments.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>

#include "tvdlab/errors.hpp"
#include "tvdlab/field_io.hpp"
#include "tvdlab/projection.hpp"
#include "tvdlab/tv_classic.hpp"

namespace tvd {

namespace {

constexpr std::array<std::pair<ExperimentId, std::string_view>, 6> kExperimentNames{{
    {ExperimentId::consistency_gaussian, "consistency_gaussian"},
    {ExperimentId::isotropy_pulse, "isotropy_pulse"},
    {ExperimentId::hill_rotation, "hill_rotation"},
    {ExperimentId::ellipse_rotation, "ellipse_rotation"},
    {ExperimentId::pulse_rotation, "pulse_rotation"},
    {ExperimentId::burgers, "burgers"},
}};

constexpr Bounds kUnitSquare{-1.0, 1.0, -1.0, 1.0};
constexpr Bounds kPulseSquare{-2.0, 2.0, -2.0, 2.0};

void report(const Progress& progress, const std::string& message) {
    if (progress) {
        progress(message);
    }
}

std::string optional_cell(const std::optional<double>& value) {
    return value ? format_double(*value) : std::string();
}

DualTvParams params_for(const DualTvParams& base, std::size_t n, bool use_default_mu) {
    DualTvParams params = base;
    if (use_default_mu) {
        params.mu = default_mu(n);
    }
    return params;
}

std::string time_tag(double t) {
    std::string tag = format_double(t);
    for (char& c : tag) {
        if (c == '.') {
            c = 'p';
        }
    }
    return tag;
}

}  // namespace

std::string_view to_string(ExperimentId id) {
    for (const auto& [key, name] : kExperimentNames) {
        if (key == id) {
            return name;
        }
    }
    return "unknown";
}

ExperimentId parse_experiment(std::string_view name) {
    for (const auto& [key, label] : kExperimentNames) {
        if (label == name) {
            return key;
        }
    }
    throw ConfigError("unknown experiment '" + std::string(name) + "'");
}

double gaussian_tv_exact(double width) {
    return std::pow(std::numbers::pi, 1.5) * width;
}

double gaussian_tva_exact(double width) {
    return 4.0 * width * std::sqrt(std::numbers::pi);
}

bool is_pde_experiment(ExperimentId id) {
    return id != ExperimentId::consistency_gaussian && id != ExperimentId::isotropy_pulse;
}

std::vector<std::size_t> default_sizes(ExperimentId id) {
    switch (id) {
        case ExperimentId::consistency_gaussian:
        case ExperimentId::isotropy_pulse:
            return {20, 40, 80, 160};
        case ExperimentId::ellipse_rotation:
            return {80, 160};
        case ExperimentId::hill_rotation:
        case ExperimentId::pulse_rotation:
        case ExperimentId::burgers:
            return {40, 80, 160};
    }
    return {};
}

std::vector<double> default_snapshot_times(ExperimentId id) {
    switch (id) {
        case ExperimentId::hill_rotation:
        case ExperimentId::ellipse_rotation: {
            std::vector<double> times{1.0 / 128.0};
            for (int k = 1; k <= 8; ++k) {
                times.push_back(k / 64.0);
            }
            return times;
        }
        case ExperimentId::pulse_rotation: {
            std::vector<double> times;
            for (int k = 1; k <= 8; ++k) {
                times.push_back(k / 64.0);
            }
            return times;
        }
        case ExperimentId::burgers:
            return {0.05, 0.1, 0.15, 0.1592, 0.17, 0.2, 0.25, 0.5};
        case ExperimentId::consistency_gaussian:
        case ExperimentId::isotropy_pulse:
            break;
    }
    return {};
}

RunConfig default_run_config(ExperimentId id, std::size_t n) {
    RunConfig config;
    config.n = n;
    config.domain = kUnitSquare;
    config.cfl = 0.2;
    config.limiter_on = true;
    config.dual.mu = default_mu(n);
    config.snapshot_times = default_snapshot_times(id);
    switch (id) {
        case ExperimentId::hill_rotation:
            config.shape = ShapeSpec::cosine_hill();
            config.t_final = 0.125;
            break;
        case ExperimentId::ellipse_rotation:
            config.shape = ShapeSpec::elliptic_hill();
            config.t_final = 0.125;
            break;
        case ExperimentId::pulse_rotation:
            config.shape = ShapeSpec::square_pulse(0.25);
            config.t_final = 0.125;
            break;
        case ExperimentId::burgers:
            config.flux = FluxModel::burgers();
            config.shape = ShapeSpec::burgers_hill();
            config.t_final = 0.5;
            break;
        case ExperimentId::consistency_gaussian:
        case ExperimentId::isotropy_pulse:
            throw ConfigError("experiment '" + std::string(to_string(id)) + "' has no time evolution");
    }
    return config;
}

std::vector<ConsistencyRow> consistency_table(const std::vector<std::size_t>& sizes, const DualTvParams& base,
                                              bool use_default_mu) {
    const double tv_exact = gaussian_tv_exact();
    const double tva_exact = gaussian_tva_exact();
    std::vector<ConsistencyRow> rows;
    for (std::size_t n : sizes) {
        const Grid grid = make_grid(n, kUnitSquare);
        const CellField u = project_cell_averages(ShapeSpec::gaussian(kGaussianWidth), grid);
        const DualTvParams params = params_for(base, n, use_default_mu);
        const DualTvResult dual = tv_dual(u, params);
        const double tv_a = tv_anisotropic(u);
        const double tv_is = tv_isotropic(u);
        rows.push_back({n, tv_a, std::abs(tv_a - tva_exact), tv_is, std::abs(tv_is - tv_exact), dual.value,
                        std::abs(dual.value - tv_exact), params.mu, dual.iterations, dual.converged});
    }
    return rows;
}

std::vector<IsotropyRow> isotropy_table(const std::vector<std::size_t>& sizes, const DualTvParams& base,
                                        bool use_default_mu) {
    const double half_width = 1.0 / std::numbers::sqrt2;
    std::vector<IsotropyRow> rows;
    for (std::size_t n : sizes) {
        const Grid grid = make_grid(n, kPulseSquare);
        const CellField u = project_cell_averages(ShapeSpec::square_pulse(half_width), grid);
        const CellField v =
            project_cell_averages(ShapeSpec::rotated_square_pulse(half_width, std::numbers::pi / 4.0), grid);
        const DualTvParams params = params_for(base, n, use_default_mu);
        const DualTvResult du = tv_dual(u, params);
        const DualTvResult dv = tv_dual(v, params);
        rows.push_back({n, tv_anisotropic(u), tv_isotropic(u), du.value, tv_anisotropic(v), tv_isotropic(v),
                        dv.value, std::abs(du.value - dv.value), params.mu, du.converged && dv.converged});
    }
    return rows;
}

std::vector<ConvergenceRow> convergence_table(const std::vector<std::size_t>& sizes,
                                              std::optional<std::size_t> baseline_n, double t_final, double cfl,
                                              const Progress& progress) {
    const auto error_at = [&](std::size_t n, bool limiter) {
        RunConfig config = default_run_config(ExperimentId::hill_rotation, n);
        config.t_final = t_final;
        config.cfl = cfl;
        config.limiter_on = limiter;
        config.snapshot_times.clear();
        report(progress, "convergence n=" + std::to_string(n) + (limiter ? " limited" : " unlimited"));
        const RunSummary run = simulate(config);
        return l1_error(run.final_state, rotated_exact(config.shape, run.t));
    };

    std::vector<std::pair<std::size_t, double>> unlimited;
    std::vector<std::pair<std::size_t, double>> limited;
    for (std::size_t n : sizes) {
        unlimited.emplace_back(n, error_at(n, false));
        limited.emplace_back(n, error_at(n, true));
    }
    std::optional<std::pair<std::size_t, double>> base_unlimited;
    std::optional<std::pair<std::size_t, double>> base_limited;
    if (baseline_n) {
        base_unlimited.emplace(*baseline_n, error_at(*baseline_n, false));
        base_limited.emplace(*baseline_n, error_at(*baseline_n, true));
    }
    const auto r_unlimited = convergence_rates(unlimited, base_unlimited);
    const auto r_limited = convergence_rates(limited, base_limited);
    std::vector<ConvergenceRow> rows;
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        rows.push_back({sizes[k], unlimited[k].second, limited[k].second, r_unlimited[k], r_limited[k]});
    }
    return rows;
}

std::vector<SnapshotRow> snapshot_table(ExperimentId id, const std::vector<std::size_t>& sizes,
                                        std::optional<bool> limiter, const Progress& progress) {
    std::vector<SnapshotRow> rows;
    for (std::size_t n : sizes) {
        RunConfig config = default_run_config(id, n);
        if (limiter) {
            config.limiter_on = *limiter;
        }
        // TV only at t = 0 and the snapshot times.
        config.dense_steps = 0;
        config.tv_stride = std::numeric_limits<std::size_t>::max();
        report(progress, std::string(to_string(id)) + " snapshots n=" + std::to_string(n));
        const MonitoredRun run = run_monitored(config);
        for (const TvRow& row : run.series.rows()) {
            rows.push_back({n, row.step, row.t, row.tv});
        }
    }
    return rows;
}

std::string consistency_csv(const std::vector<ConsistencyRow>& rows) {
    std::ostringstream out;
    out << "n,tv_a,dtv_a,tv_is,dtv_is,tv_d,dtv_d,mu,tv_d_iters,converged\n";
    for (const auto& r : rows) {
        out << r.n << ',' << format_double(r.tv_a) << ',' << format_double(r.dtv_a) << ',' << format_double(r.tv_is)
            << ',' << format_double(r.dtv_is) << ',' << format_double(r.tv_d) << ',' << format_double(r.dtv_d) << ','
            << format_double(r.mu) << ',' << r.iterations << ',' << (r.converged ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string isotropy_csv(const std::vector<IsotropyRow>& rows) {
    std::ostringstream out;
    out << "n,tva_u,tvis_u,tvd_u,tva_v,tvis_v,tvd_v,delta_tvd,mu,converged\n";
    for (const auto& r : rows) {
        out << r.n << ',' << format_double(r.tva_u) << ',' << format_double(r.tvis_u) << ','
            << format_double(r.tvd_u) << ',' << format_double(r.tva_v) << ',' << format_double(r.tvis_v) << ','
            << format_double(r.tvd_v) << ',' << format_double(r.delta_tvd) << ',' << format_double(r.mu) << ','
            << (r.converged ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
    std::ostringstream out;
    out << "n,l1_unlimited,l1_limited,rate_unlimited,rate_limited\n";
    for (const auto& r : rows) {
        out << r.n << ',' << format_double(r.l1_unlimited) << ',' << format_double(r.l1_limited) << ','
            << optional_cell(r.rate_unlimited) << ',' << optional_cell(r.rate_limited) << '\n';
    }
    return out.str();
}

std::string snapshot_csv(const std::vector<SnapshotRow>& rows) {
    std::ostringstream out;
    out << "n,step,t,tv_a,tv_is,tv_d,tv_d_iters,converged\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.step << ',' << format_double(r.t) << ',' << format_double(r.tv.tv_a) << ','
            << format_double(r.tv.tv_is) << ',' << format_double(r.tv.tv_d) << ',' << r.tv.tv_d_iters << ','
            << (r.tv.converged ? 1 : 0) << '\n';
    }
    return out.str();
}

OutputReport write_table(int which, const std::filesystem::path& out_dir, const Progress& progress) {
    OutputReport result;
    const auto emit = [&](const std::string& name, const std::string& text) {
        const auto path = out_dir / name;
        write_file_atomic(path, text);
        result.files.push_back(path);
    };
    const auto snapshots_converged = [](const std::vector<SnapshotRow>& rows) {
        for (const auto& r : rows) {
            if (!r.tv.converged) {
                return false;
            }
        }
        return true;
    };
    switch (which) {
        case 1: {
            report(progress, "table 1");
            const auto rows = consistency_table(default_sizes(ExperimentId::consistency_gaussian), {});
            for (const auto& r : rows) {
                result.all_converged = result.all_converged && r.converged;
            }
            emit("table1_consistency.csv", consistency_csv(rows));
            break;
        }
        case 2: {
            report(progress, "table 2");
            const auto rows = isotropy_table(default_sizes(ExperimentId::isotropy_pulse), {});
            for (const auto& r : rows) {
                result.all_converged = result.all_converged && r.converged;
            }
            emit("table2_isotropy.csv", isotropy_csv(rows));
            break;
        }
        case 3:
            emit("table3_convergence.csv", convergence_csv(convergence_table({40, 80, 160, 320}, 20, 0.125, 0.2,
                                                                             progress)));
            break;
        case 4: {
            const auto rows = snapshot_table(ExperimentId::hill_rotation, default_sizes(ExperimentId::hill_rotation),
                                             false, progress);
            result.all_converged = snapshots_converged(rows);
            emit("table4_hill_unlimited.csv", snapshot_csv(rows));
            break;
        }
        case 5: {
            const auto rows = snapshot_table(ExperimentId::pulse_rotation,
                                             default_sizes(ExperimentId::pulse_rotation), true, progress);
            result.all_converged = snapshots_converged(rows);
            emit("table5_pulse_limited.csv", snapshot_csv(rows));
            break;
        }
        case 6: {
            const auto rows =
                snapshot_table(ExperimentId::burgers, default_sizes(ExperimentId::burgers), true, progress);
            result.all_converged = snapshots_converged(rows);
            emit("table6_burgers.csv", snapshot_csv(rows));
            break;
        }
        default:
            throw ConfigError("table must be 1..6");
    }
    return result;
}

OutputReport run_experiment(const ExperimentRequest& request, const Progress& progress) {
    const ExperimentOverrides& ov = request.overrides;
    const std::vector<std::size_t> sizes = ov.n ? std::vector<std::size_t>{*ov.n} : default_sizes(request.id);
    const std::string stem(to_string(request.id));

    DualTvParams base;
    if (ov.gamma) base.gamma = *ov.gamma;
    if (ov.epsilon) base.epsilon = *ov.epsilon;
    if (ov.max_iter) base.max_iter = *ov.max_iter;
    if (ov.mu) base.mu = *ov.mu;
    const bool use_default_mu = !ov.mu;

    OutputReport result;
    const auto emit = [&](const std::string& name, const std::string& text) {
        const auto path = request.out_dir / name;
        write_file_atomic(path, text);
        result.files.push_back(path);
    };

    if (request.id == ExperimentId::consistency_gaussian) {
        const auto rows = consistency_table(sizes, base, use_default_mu);
        for (const auto& r : rows) {
            result.all_converged = result.all_converged && r.converged;
        }
        emit(stem + ".csv", consistency_csv(rows));
        return result;
    }
    if (request.id == ExperimentId::isotropy_pulse) {
        const auto rows = isotropy_table(sizes, base, use_default_mu);
        for (const auto& r : rows) {
            result.all_converged = result.all_converged && r.converged;
        }
        emit(stem + ".csv", isotropy_csv(rows));
        return result;
    }

    for (std::size_t n : sizes) {
        RunConfig config = default_run_config(request.id, n);
        if (ov.cfl) config.cfl = *ov.cfl;
        if (ov.limiter) config.limiter_on = *ov.limiter;
        if (ov.stride) config.tv_stride = *ov.stride;
        if (ov.t_final) {
            config.t_final = *ov.t_final;
            std::erase_if(config.snapshot_times, [&](double t) { return t > config.t_final; });
        }
        config.dual = params_for(base, n, use_default_mu);

        report(progress, stem + " n=" + std::to_string(n));
        const MonitoredRun run = run_monitored(config, true);
        result.all_converged = result.all_converged && run.series.all_converged();

        const std::string prefix = stem + "_n" + std::to_string(n);
        std::ostringstream series;
        run.series.write_csv(series);
        emit(prefix + "_tv.csv", series.str());
        for (const auto& [t, state] : run.snapshots) {
            std::ostringstream field;
            write_field(field, cell_means(state));
            emit(prefix + "_t" + time_tag(t) + ".field", field.str());
        }

        std::ostringstream manifest;
        manifest << "experiment=" << stem << '\n'
                 << "n=" << n << '\n'
                 << "domain=" << format_double(config.domain.xmin) << ',' << format_double(config.domain.xmax) << ','
                 << format_double(config.domain.ymin) << ',' << format_double(config.domain.ymax) << '\n'
                 << "flux=" << to_string(config.flux.kind) << '\n'
                 << "shape=" << to_string(config.shape.kind) << '\n'
                 << "cfl=" << format_double(config.cfl) << '\n'
                 << "t_final=" << format_double(config.t_final) << '\n'
                 << "limiter=" << (config.limiter_on ? 1 : 0) << '\n'
                 << "limiter_alpha=" << format_double(config.limiter_alpha) << '\n'
                 << "tv.mu=" << format_double(config.dual.mu) << '\n'
                 << "tv.gamma=" << format_double(config.dual.gamma) << '\n'
                 << "tv.epsilon=" << format_double(config.dual.epsilon) << '\n'
                 << "tv.max_iter=" << config.dual.max_iter << '\n'
                 << "tv.stride=" << config.tv_stride << '\n'
                 << "tv.dense_steps=" << config.dense_steps << '\n'
                 << "steps=" << run.summary.steps << '\n'
                 << "dt_min=" << format_double(run.summary.dt_min) << '\n'
                 << "dt_max=" << format_double(run.summary.dt_max) << '\n'
                 << "all_converged=" << (run.series.all_converged() ? 1 : 0) << '\n';
        if (config.flux.kind == FluxKind::rotation) {
            manifest << "l1_error=" << format_double(l1_error(run.summary.final_state, rotated_exact(config.shape, run.summary.t)))
                     << '\n';
        }
        emit(prefix + "_manifest.txt", manifest.str());
    }

    if (request.id == ExperimentId::hill_rotation && sizes.size() > 1) {
        const double t_final = ov.t_final.value_or(0.125);
        const double cfl = ov.cfl.value_or(0.2);
        emit(stem + "_convergence.csv", convergence_csv(convergence_table(sizes, std::nullopt, t_final, cfl, progress)));
    }
    return result;
}

}  // namespace tvd
