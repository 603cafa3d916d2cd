#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tvdlab/simulation.hpp"
#include "tvdlab/tv_dual.hpp"

namespace tvd {

/// The three discrete TVs of one cell-mean field.
struct TvTriple {
    double tv_a = 0.0;
    double tv_is = 0.0;
    double tv_d = 0.0;
    std::size_t tv_d_iters = 0;
    bool converged = true;
};

TvTriple measure_tv(const CellField& field, const DualTvParams& params);

struct TvRow {
    std::size_t step = 0;
    double t = 0.0;
    TvTriple tv;
};

/// TV history of one run; t is strictly increasing.
class TvTimeSeries {
public:
    /// Throws std::invalid_argument when t does not increase.
    void push(const TvRow& row);

    const std::vector<TvRow>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    bool all_converged() const;

    /// Header step,t,tv_a,tv_is,tv_d,tv_d_iters,converged.
    void write_csv(std::ostream& out) const;

private:
    std::vector<TvRow> rows_;
};

enum class TvColumn { tv_a, tv_is, tv_d };

double column_value(const TvTriple& tv, TvColumn column);

struct TvdVerdict {
    bool is_tvd = true;
    /// (step, increase) of the first consecutive increase above slack.
    std::optional<std::pair<std::size_t, double>> first_violation;
};

/// Throws std::invalid_argument on an empty series.
TvdVerdict tvd_verdict(const TvTimeSeries& series, TvColumn column, double slack);

/// r_k = log2(e_{k-1} / e_k). The first entry gets a rate only when a coarser
/// baseline is given. Throws std::invalid_argument unless n doubles between
/// consecutive entries (baseline included).
std::vector<std::optional<double>> convergence_rates(
    const std::vector<std::pair<std::size_t, double>>& errors,
    std::optional<std::pair<std::size_t, double>> baseline = std::nullopt);

struct MonitoredRun {
    RunSummary summary;
    TvTimeSeries series;
    /// States at the configured snapshot times, in time order.
    std::vector<std::pair<double, DGState>> snapshots;
};

/// simulate() with TV of the cell means recorded at step 0, every step up to
/// dense_steps, every tv_stride steps after that, and at snapshot times.
/// With config.warm_start each dual solve starts from the previous one.
MonitoredRun run_monitored(const RunConfig& config, bool keep_snapshots = false);

/// Writes `text` to `path` through a temporary file and a rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& text);

}  // namespace tvd
