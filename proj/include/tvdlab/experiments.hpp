#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tvdlab/harness.hpp"
#include "tvdlab/simulation.hpp"

namespace tvd {

enum class ExperimentId {
    consistency_gaussian,
    isotropy_pulse,
    hill_rotation,
    ellipse_rotation,
    pulse_rotation,
    burgers,
};

std::string_view to_string(ExperimentId id);
/// Throws ConfigError for an unknown name.
ExperimentId parse_experiment(std::string_view name);

/// Width of the Gaussian bump exp(-r^2 / s^2) used for the consistency test.
inline constexpr double kGaussianWidth = 0.15;
/// Continuum TV and anisotropic TV of that bump on the plane.
double gaussian_tv_exact(double width = kGaussianWidth);
double gaussian_tva_exact(double width = kGaussianWidth);

/// Mesh sizes each experiment runs by default.
std::vector<std::size_t> default_sizes(ExperimentId id);
/// Snapshot times reported for the PDE experiments (empty otherwise).
std::vector<double> default_snapshot_times(ExperimentId id);
/// Fixed setup of a PDE experiment at mesh size n. Throws ConfigError for
/// the two static TV experiments.
RunConfig default_run_config(ExperimentId id, std::size_t n);
bool is_pde_experiment(ExperimentId id);

using Progress = std::function<void(const std::string&)>;

struct ConsistencyRow {
    std::size_t n;
    double tv_a, dtv_a, tv_is, dtv_is, tv_d, dtv_d, mu;
    std::size_t iterations;
    bool converged;
};

/// Gaussian cell averages on [-1, 1]^2; dtv_* is the distance to the continuum
/// value (tv_a against the anisotropic integral). mu per row from default_mu
/// unless base.mu is forced with use_default_mu = false.
std::vector<ConsistencyRow> consistency_table(const std::vector<std::size_t>& sizes, const DualTvParams& base,
                                              bool use_default_mu = true);

struct IsotropyRow {
    std::size_t n;
    double tva_u, tvis_u, tvd_u, tva_v, tvis_v, tvd_v, delta_tvd, mu;
    bool converged;
};

/// Axis-aligned and 45-degree pulses of half-width 1/sqrt(2) on [-2, 2]^2.
std::vector<IsotropyRow> isotropy_table(const std::vector<std::size_t>& sizes, const DualTvParams& base,
                                        bool use_default_mu = true);

struct ConvergenceRow {
    std::size_t n;
    double l1_unlimited, l1_limited;
    std::optional<double> rate_unlimited, rate_limited;
};

/// L1 errors of the rotating hill at t_final against the exact rotation,
/// unlimited and limited. When baseline_n is set it is run too and only used
/// for the first rates.
std::vector<ConvergenceRow> convergence_table(const std::vector<std::size_t>& sizes,
                                              std::optional<std::size_t> baseline_n, double t_final = 0.125,
                                              double cfl = 0.2, const Progress& progress = {});

struct SnapshotRow {
    std::size_t n;
    std::size_t step;
    double t;
    TvTriple tv;
};

/// TV of the cell means at the default snapshot times (t = 0 included) of a
/// PDE experiment for each size. limiter overrides the experiment default.
std::vector<SnapshotRow> snapshot_table(ExperimentId id, const std::vector<std::size_t>& sizes,
                                        std::optional<bool> limiter = std::nullopt, const Progress& progress = {});

std::string consistency_csv(const std::vector<ConsistencyRow>& rows);
std::string isotropy_csv(const std::vector<IsotropyRow>& rows);
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);
std::string snapshot_csv(const std::vector<SnapshotRow>& rows);

struct OutputReport {
    std::vector<std::filesystem::path> files;
    bool all_converged = true;
};

/// Regenerates one of the six reference tables into out_dir:
/// 1 consistency, 2 isotropy, 3 convergence, 4 unlimited hill snapshots,
/// 5 limited pulse snapshots, 6 Burgers snapshots. Throws ConfigError for
/// other values.
OutputReport write_table(int which, const std::filesystem::path& out_dir, const Progress& progress = {});

/// Values a config file may override.
struct ExperimentOverrides {
    std::optional<std::size_t> n;
    std::optional<double> cfl;
    std::optional<double> t_final;
    std::optional<bool> limiter;
    std::optional<double> mu;
    std::optional<double> gamma;
    std::optional<double> epsilon;
    std::optional<std::size_t> max_iter;
    std::optional<std::size_t> stride;
};

struct ExperimentRequest {
    ExperimentId id = ExperimentId::hill_rotation;
    ExperimentOverrides overrides;
    std::filesystem::path out_dir = "out";
};

/// Runs one experiment: the table CSV for the static TV experiments; for the
/// PDE experiments a TV time series CSV, snapshot field files and a manifest
/// per mesh size (plus the convergence CSV for hill_rotation when more than
/// one size runs).
OutputReport run_experiment(const ExperimentRequest& request, const Progress& progress = {});

/// Parses a JSON config; nested objects flatten to dotted keys. Accepted keys:
/// experiment, n, cfl, t_final, limiter, tv.mu, tv.gamma, tv.epsilon,
/// tv.max_iter, tv.stride, out_dir. Throws ConfigError on unknown keys, type
/// mismatches or malformed JSON.
ExperimentRequest parse_config(std::string_view json_text);
ExperimentRequest load_config(const std::filesystem::path& path);

}  // namespace tvd
