// tvdlab: project shapes, evaluate discrete TVs, run the DG experiments.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tvdlab/errors.hpp"
#include "tvdlab/experiments.hpp"
#include "tvdlab/field_io.hpp"
#include "tvdlab/projection.hpp"
#include "tvdlab/tv_classic.hpp"
#include "tvdlab/tv_dual.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnconverged = 2;

tvd::Bounds parse_domain(const std::string& text) {
    std::vector<double> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw tvd::ConfigError("domain must be four comma-separated numbers");
        }
    }
    if (values.size() != 4) {
        throw tvd::ConfigError("domain must be four comma-separated numbers");
    }
    return {values[0], values[1], values[2], values[3]};
}

tvd::ShapeSpec default_shape(tvd::ShapeKind kind) {
    using tvd::ShapeKind;
    using tvd::ShapeSpec;
    switch (kind) {
        case ShapeKind::gaussian:
            return ShapeSpec::gaussian();
        case ShapeKind::square_pulse:
            return ShapeSpec::square_pulse();
        case ShapeKind::rotated_square_pulse:
            return ShapeSpec::rotated_square_pulse();
        case ShapeKind::cosine_hill:
            return ShapeSpec::cosine_hill();
        case ShapeKind::elliptic_hill:
            return ShapeSpec::elliptic_hill();
        case ShapeKind::burgers_hill:
            return ShapeSpec::burgers_hill();
        case ShapeKind::constant:
            return ShapeSpec::constant(1.0);
    }
    return {};
}

struct DualOptions {
    std::optional<double> mu;
    double gamma = 0.33;
    double eps = 1e-7;
    std::size_t max_iter = 20000;
    double feas_tol = 1e-3;

    tvd::DualTvParams params(std::size_t n) const {
        tvd::DualTvParams p;
        p.mu = mu.value_or(tvd::default_mu(n));
        p.gamma = gamma;
        p.epsilon = eps;
        p.max_iter = max_iter;
        p.feasibility_tol = feas_tol;
        return p;
    }
};

void add_dual_options(CLI::App* cmd, DualOptions& opts) {
    cmd->add_option("--mu", opts.mu, "Penalty parameter (default: tuned per n)");
    cmd->add_option("--gamma", opts.gamma, "Step size")->capture_default_str();
    cmd->add_option("--eps", opts.eps, "Stopping tolerance on the primal norm change")->capture_default_str();
    cmd->add_option("--max-iter", opts.max_iter, "Iteration cap")->capture_default_str();
    cmd->add_option("--feas-tol", opts.feas_tol, "Relative feasibility required to stop; 0 disables")
        ->capture_default_str();
}

void progress_to_stderr(const std::string& message) {
    std::cerr << "[tvdlab] " << message << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete total variation and DG experiments"};
    app.require_subcommand(1);

    // project
    auto* project = app.add_subcommand("project", "Write cell averages of a shape");
    std::string shape_name;
    std::size_t project_n = 0;
    std::string domain_text = "-1,1,-1,1";
    std::string project_out;
    std::optional<double> radius;
    std::optional<double> theta;
    int quad_order = 4;
    project->add_option("--shape", shape_name, "Shape kind")->required();
    project->add_option("--n", project_n, "Cells per side")->required();
    project->add_option("--domain", domain_text, "x0,x1,y0,y1")->capture_default_str();
    project->add_option("--out", project_out, "Output field file")->required();
    project->add_option("--radius", radius, "Override width / half-width / radius");
    project->add_option("--theta", theta, "Rotation angle about the origin");
    project->add_option("--quad-order", quad_order, "Gauss points per direction for smooth shapes")
        ->capture_default_str();

    // tv
    auto* tv = app.add_subcommand("tv", "Discrete TV of a field file");
    std::string tv_input;
    std::string method = "dual";
    std::string trace_path;
    DualOptions tv_dual_opts;
    tv->add_option("--input", tv_input, "Field file")->required();
    tv->add_option("--method", method, "aniso, iso or dual")
        ->check(CLI::IsMember({"aniso", "iso", "dual"}))
        ->capture_default_str();
    tv->add_option("--trace", trace_path, "CSV of iter,primal_norm,dual_objective,residual");
    add_dual_options(tv, tv_dual_opts);

    // mu-search
    auto* search = app.add_subcommand("mu-search", "Scan mu in (0, 1) for the dual TV closest to a reference");
    std::string search_input;
    double reference = 0.0;
    double step = 0.05;
    DualOptions search_opts;
    search->add_option("--input", search_input, "Field file")->required();
    search->add_option("--ref", reference, "Reference TV")->required();
    search->add_option("--step", step, "Mu increment")->capture_default_str();
    add_dual_options(search, search_opts);

    // solve
    auto* solve = app.add_subcommand("solve", "Run an experiment from a JSON config");
    std::string config_path;
    solve->add_option("--config", config_path, "Config file")->required()->check(CLI::ExistingFile);

    // tables
    auto* tables = app.add_subcommand("tables", "Regenerate a reference table as CSV");
    int which = 1;
    std::string out_dir = "out";
    tables->add_option("--which", which, "Table 1..6")->required()->check(CLI::Range(1, 6));
    tables->add_option("--out-dir", out_dir, "Output directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*project) {
            tvd::ShapeSpec spec = default_shape(tvd::parse_shape_kind(shape_name));
            if (radius) spec.radius = *radius;
            if (theta) spec.theta = *theta;
            const tvd::Grid grid = tvd::make_grid(project_n, parse_domain(domain_text));
            tvd::write_field(project_out, tvd::project_cell_averages(spec, grid, quad_order));
            return kExitOk;
        }
        if (*tv) {
            const tvd::CellField field = tvd::read_field(tv_input);
            if (method == "aniso") {
                std::cout << "tv_a=" << tvd::format_double(tvd::tv_anisotropic(field)) << '\n';
                return kExitOk;
            }
            if (method == "iso") {
                std::cout << "tv_is=" << tvd::format_double(tvd::tv_isotropic(field)) << '\n';
                return kExitOk;
            }
            std::ofstream trace_out;
            tvd::DualTvTrace trace;
            if (!trace_path.empty()) {
                trace_out.open(trace_path);
                if (!trace_out) {
                    throw tvd::ConfigError("cannot write " + trace_path);
                }
                trace_out << "iter,primal_norm,dual_objective,residual\n";
                trace = [&trace_out](const tvd::DualTvTraceRow& row) {
                    trace_out << row.iteration << ',' << tvd::format_double(row.primal_norm) << ','
                              << tvd::format_double(row.dual_objective) << ',' << tvd::format_double(row.residual)
                              << '\n';
                };
            }
            const tvd::DualTvResult r = tvd::tv_dual(field, tv_dual_opts.params(field.n()), trace);
            std::cout << "tv_d=" << tvd::format_double(r.value) << " iters=" << r.iterations
                      << " residual=" << tvd::format_double(r.feasibility_residual)
                      << " converged=" << (r.converged ? 1 : 0) << '\n';
            return r.converged ? kExitOk : kExitUnconverged;
        }
        if (*search) {
            const tvd::CellField field = tvd::read_field(search_input);
            const tvd::MuSearchResult r = tvd::mu_search(field, reference, step, search_opts.params(field.n()));
            std::cout << "mu=" << tvd::format_double(r.mu) << " tv_d=" << tvd::format_double(r.tv)
                      << " delta=" << tvd::format_double(r.delta) << '\n';
            return kExitOk;
        }
        if (*solve) {
            const tvd::OutputReport report = tvd::run_experiment(tvd::load_config(config_path), progress_to_stderr);
            for (const auto& path : report.files) {
                std::cout << path.string() << '\n';
            }
            return report.all_converged ? kExitOk : kExitUnconverged;
        }
        if (*tables) {
            const tvd::OutputReport report = tvd::write_table(which, out_dir, progress_to_stderr);
            for (const auto& path : report.files) {
                std::cout << path.string() << '\n';
            }
            return report.all_converged ? kExitOk : kExitUnconverged;
        }
    } catch (const std::exception& e) {
        std::cerr << "tvdlab: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
