#include "tvdlab/harness.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "tvdlab/errors.hpp"
#include "tvdlab/field_io.hpp"
#include "tvdlab/tv_classic.hpp"

namespace tvd {

TvTriple measure_tv(const CellField& field, const DualTvParams& params) {
    const DualTvResult dual = tv_dual(field, params);
    return {tv_anisotropic(field), tv_isotropic(field), dual.value, dual.iterations, dual.converged};
}

void TvTimeSeries::push(const TvRow& row) {
    if (!rows_.empty() && !(row.t > rows_.back().t)) {
        throw std::invalid_argument("TV series times must increase strictly");
    }
    rows_.push_back(row);
}

bool TvTimeSeries::all_converged() const {
    for (const TvRow& row : rows_) {
        if (!row.tv.converged) {
            return false;
        }
    }
    return true;
}

void TvTimeSeries::write_csv(std::ostream& out) const {
    out << "step,t,tv_a,tv_is,tv_d,tv_d_iters,converged\n";
    for (const TvRow& row : rows_) {
        out << row.step << ',' << format_double(row.t) << ',' << format_double(row.tv.tv_a) << ','
            << format_double(row.tv.tv_is) << ',' << format_double(row.tv.tv_d) << ',' << row.tv.tv_d_iters << ','
            << (row.tv.converged ? 1 : 0) << '\n';
    }
}

double column_value(const TvTriple& tv, TvColumn column) {
    switch (column) {
        case TvColumn::tv_a:
            return tv.tv_a;
        case TvColumn::tv_is:
            return tv.tv_is;
        case TvColumn::tv_d:
            return tv.tv_d;
    }
    return 0.0;
}

TvdVerdict tvd_verdict(const TvTimeSeries& series, TvColumn column, double slack) {
    if (series.empty()) {
        throw std::invalid_argument("tvd_verdict needs a nonempty series");
    }
    const auto& rows = series.rows();
    for (std::size_t k = 1; k < rows.size(); ++k) {
        const double increase = column_value(rows[k].tv, column) - column_value(rows[k - 1].tv, column);
        if (increase > slack) {
            return {false, std::make_pair(rows[k].step, increase)};
        }
    }
    return {};
}

std::vector<std::optional<double>> convergence_rates(const std::vector<std::pair<std::size_t, double>>& errors,
                                                     std::optional<std::pair<std::size_t, double>> baseline) {
    std::vector<std::optional<double>> rates;
    rates.reserve(errors.size());
    std::optional<std::pair<std::size_t, double>> previous = baseline;
    for (const auto& entry : errors) {
        if (previous) {
            if (entry.first != 2 * previous->first) {
                throw std::invalid_argument("convergence_rates needs n to double between entries");
            }
            rates.emplace_back(std::log2(previous->second / entry.second));
        } else {
            rates.emplace_back(std::nullopt);
        }
        previous = entry;
    }
    return rates;
}

MonitoredRun run_monitored(const RunConfig& config, bool keep_snapshots) {
    MonitoredRun run{RunSummary{DGState(make_grid(2, config.domain))}, {}, {}};
    std::optional<std::pair<GradField, EdgeVectorField>> previous;

    const auto observer = [&](const StepInfo& info) {
        const bool dense = info.step <= config.dense_steps || info.step % config.tv_stride == 0;
        if (!dense && !info.at_snapshot) {
            return;
        }
        const CellField means = cell_means(info.state);
        DualTvParams params = config.dual;
        if (config.warm_start && previous) {
            params.warm_start = previous;
        }
        const DualTvResult dual = tv_dual(means, params);
        if (config.warm_start) {
            previous.emplace(dual.v, dual.phi);
        }
        run.series.push({info.step, info.t,
                         {tv_anisotropic(means), tv_isotropic(means), dual.value, dual.iterations, dual.converged}});
        if (keep_snapshots && info.at_snapshot) {
            run.snapshots.emplace_back(info.t, info.state);
        }
    };
    run.summary = simulate(config, observer);
    return run;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw ConfigError("cannot write " + tmp.string());
        }
        out << text;
        if (!out) {
            throw ConfigError("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace tvd
