// rcpde: run tabulated experiments, single solves and Monte Carlo moments.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>

#include "rcpde/ekman_oracle.hpp"
#include "rcpde/errors.hpp"
#include "rcpde/harness/config.hpp"
#include "rcpde/harness/experiments.hpp"

namespace {

using namespace rcpde;
using namespace rcpde::harness;

enum ExitCode { kOk = 0, kUnexpected = 1, kConfig = 2, kHypothesis = 3, kNumerical = 4 };

struct Overrides {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<int> threads;
    bool no_timestamp = false;

    void attach(CLI::App* app) {
        app->add_option("--config", config, "YAML config overlaid on the defaults");
        app->add_option("--seed", seed, "Monte Carlo seed");
        app->add_option("--out", out, "Output directory for CSV files");
        app->add_option("--threads", threads, "Worker threads (results do not depend on it)");
        app->add_flag("--no-timestamp", no_timestamp, "Omit the '# generated:' line");
    }

    void apply(ExperimentConfig& cfg) const {
        if (seed) cfg.seed = *seed;
        if (out) cfg.out_dir = *out;
        if (threads) cfg.threads = *threads;
        if (no_timestamp) cfg.timestamp = false;
    }
};

void print_report(const ErrorReport& r) {
    if (r.rows.empty()) return;
    std::printf("%-10s", r.sweep_name.c_str());
    for (const auto& m : r.metric_names) std::printf(" %16s", m.c_str());
    std::printf(" %10s\n", "seconds");
    for (const auto& row : r.rows) {
        std::printf("%-10g", row.sweep_value);
        for (double v : row.metrics) std::printf(" %16.4e", v);
        std::printf(" %10.3f\n", row.seconds);
    }
}

int run_and_write(const ExperimentConfig& cfg) {
    const ExperimentOutput out = run_experiment(cfg);
    print_report(out.report);
    for (const auto& path : write_outputs(out, cfg)) std::printf("wrote %s\n", path.c_str());
    return kOk;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"Cosine-transform solver for coupled parabolic systems on the half-line"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Run a named experiment (table1..table8, figures, custom)");
    std::string run_id;
    Overrides run_over;
    run->add_option("experiment", run_id, "Experiment id; may come from --config instead");
    run_over.attach(run);

    // list
    auto* list = app.add_subcommand("list", "List experiment ids");

    // solve
    auto* solve = app.add_subcommand("solve", "Solve the deterministic Ekman problem at one point");
    double a = 1.0, nu = 1.0, z = 5.0, t = 1.0, R = 20.0, h = 0.05;
    int M = 8;
    std::string method = "midpoint", layout = "midpoint";
    solve->add_option("--a", a, "Rotation parameter")->capture_default_str();
    solve->add_option("--nu", nu, "Diffusivity")->capture_default_str();
    solve->add_option("--z", z, "Depth")->capture_default_str();
    solve->add_option("--t", t, "Time")->capture_default_str();
    solve->add_option("--R", R, "Truncation radius")->capture_default_str();
    solve->add_option("--step", h, "Frequency step h")->capture_default_str();
    solve->add_option("--M", M, "Gauss-Laguerre degree")->capture_default_str();
    solve->add_option("--method", method, "midpoint | laguerre | exact")
        ->check(CLI::IsMember({"midpoint", "laguerre", "exact"}))
        ->capture_default_str();
    solve->add_option("--layout", layout, "midpoint | shifted")
        ->check(CLI::IsMember({"midpoint", "shifted"}))
        ->capture_default_str();

    // moments
    auto* moments = app.add_subcommand("moments", "Monte Carlo moments on the profile grid");
    Overrides mom_over;
    std::optional<int> mom_K;
    std::optional<double> mom_R;
    mom_over.attach(moments);
    moments->add_option("--K", mom_K, "Number of realizations");
    moments->add_option("--R", mom_R, "Truncation radius");

    // select-R
    auto* select = app.add_subcommand("select-R", "Smallest R whose truncation bound meets --tol");
    double tol = 1e-6, sel_t = 1.0, sel_a = 1.0, sel_nu = 1.0;
    select->add_option("--a", sel_a, "Rotation parameter")->capture_default_str();
    select->add_option("--nu", sel_nu, "Diffusivity")->capture_default_str();
    select->add_option("--t", sel_t, "Time")->capture_default_str();
    select->add_option("--tol", tol, "Target bound on the tail error")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfig;
    }

    if (*list) {
        for (const auto& n : experiment_names()) std::printf("%s\n", n.c_str());
        return kOk;
    }
    if (*run) {
        ExperimentConfig cfg;
        if (!run_id.empty()) {
            cfg = default_config(parse_experiment_id(run_id));
            if (!run_over.config.empty()) cfg = load_config(run_over.config, cfg);
        } else if (!run_over.config.empty()) {
            cfg = load_experiment(run_over.config);
        } else {
            throw ConfigError("experiment", "give an experiment id or --config");
        }
        run_over.apply(cfg);
        return run_and_write(cfg);
    }
    if (*solve) {
        const auto p = ekman_problem(a, nu);
        Vector2 u;
        if (method == "exact") {
            u = exact_solution(a, nu, [](double) { return 1.0; }, z, t);
        } else if (method == "laguerre") {
            u = gauss_laguerre_inverse(p, GaussLaguerreRule::make(M), z, t);
        } else {
            u = midpoint_inverse(p, QuadratureGrid::from_step(R, h, parse_layout(layout)), z, t);
        }
        std::printf("u1,u2\n%.17g,%.17g\n", u.v1, u.v2);
        return kOk;
    }
    if (*moments) {
        ExperimentConfig cfg = default_config(ExperimentId::kCustom);
        if (!mom_over.config.empty()) cfg = load_config(mom_over.config, cfg);
        mom_over.apply(cfg);
        if (mom_K) cfg.K_fixed = *mom_K;
        if (mom_R) cfg.R_fixed = *mom_R;
        const MomentField m = run_moments(cfg);
        const CsvTable table = moments_table(m, "moments");
        if (mom_over.out) {
            std::printf("wrote %s\n",
                        write_csv_file(cfg.out_dir, table, cfg.timestamp ? utc_timestamp() : "").c_str());
        } else {
            write_csv(std::cout, table);
        }
        return kOk;
    }
    if (*select) {
        const auto p = ekman_problem(sel_a, sel_nu);
        // Ekman preset: zero initial data, unit flux.
        const double r = select_radius(p, sel_t, 0.0, 1.0, tol);
        const auto b = truncation_bound(p, r, sel_t, 0.0, 1.0);
        std::printf("R,bound\n%.17g,%.17g\n", r, 2.0 / 3.141592653589793 * b.total());
        return kOk;
    }
    return kUnexpected;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error [%s]: %s\n", e.field().c_str(), e.what());
        return kConfig;
    } catch (const InvalidParameter& e) {
        std::fprintf(stderr, "invalid parameter: %s\n", e.what());
        return kConfig;
    } catch (const SpectralConditionViolated& e) {
        std::fprintf(stderr, "hypothesis failed: %s\n", e.what());
        return kHypothesis;
    } catch (const Error& e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return kNumerical;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUnexpected;
    }
}
