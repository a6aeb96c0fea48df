#include "rcpde/harness/experiments.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

#include "rcpde/ekman_oracle.hpp"
#include "rcpde/errors.hpp"
#include "rcpde/harness/metrics.hpp"
#include "rcpde/parallel.hpp"

namespace rcpde::harness {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, x);
    return buf;
}

const ScalarFunction kUnitFlux = [](double) { return 1.0; };

std::vector<std::string> common_notes(const ExperimentConfig& cfg) {
    return {"experiment: " + to_string(cfg.id), "layout: " + to_string(cfg.layout)};
}

ErrorReport make_report(const ExperimentConfig& cfg, std::string sweep,
                        std::vector<std::string> metrics) {
    ErrorReport r;
    r.experiment = to_string(cfg.id);
    r.sweep_name = std::move(sweep);
    r.metric_names = std::move(metrics);
    r.notes = common_notes(cfg);
    return r;
}

void add_row(ErrorReport& r, double sweep_value, const std::function<std::vector<double>()>& body) {
    const auto start = Clock::now();
    ErrorReport::Row row;
    row.sweep_value = sweep_value;
    row.metrics = body();
    row.seconds = seconds_since(start);
    r.rows.push_back(std::move(row));
}

// Tables 1-3 evaluate at a single (z, t), the first point of each range.
struct Point {
    double z;
    double t;
};

Point eval_point(const ExperimentConfig& cfg) { return {cfg.z.start, cfg.t.start}; }

ErrorReport run_gauss_laguerre(const ExperimentConfig& cfg) {
    const auto p = ekman_problem(cfg.a, cfg.nu);
    const Point pt = eval_point(cfg);
    const Vector2 exact = exact_solution(cfg.a, cfg.nu, kUnitFlux, pt.z, pt.t, cfg.oracle());
    auto r = make_report(cfg, "M", {"abs_err_u1", "abs_err_u2"});
    r.notes.push_back("z = " + fmt("%g", pt.z) + ", t = " + fmt("%g", pt.t));
    for (int m : cfg.M_list) {
        add_row(r, m, [&] {
            const auto rule = GaussLaguerreRule::make(m);
            const auto e = abs_error(gauss_laguerre_inverse(p, rule, pt.z, pt.t, cfg.kernel()), exact);
            return std::vector<double>{e.u1, e.u2};
        });
    }
    return r;
}

ErrorReport run_midpoint_point(const ExperimentConfig& cfg, bool sweep_radius) {
    const auto p = ekman_problem(cfg.a, cfg.nu);
    const Point pt = eval_point(cfg);
    const Vector2 exact = exact_solution(cfg.a, cfg.nu, kUnitFlux, pt.z, pt.t, cfg.oracle());
    auto r = make_report(cfg, sweep_radius ? "R" : "h", {"abs_err_u1", "abs_err_u2"});
    r.notes.push_back("z = " + fmt("%g", pt.z) + ", t = " + fmt("%g", pt.t));
    auto one = [&](double R, double h) {
        const auto grid = QuadratureGrid::from_step(R, h, cfg.layout);
        const auto e = abs_error(midpoint_inverse(p, grid, pt.z, pt.t, cfg.kernel()), exact);
        return std::vector<double>{e.u1, e.u2};
    };
    if (sweep_radius) {
        r.notes.push_back("h = " + fmt("%g", cfg.h_list.front()));
        for (double R : cfg.R_list) add_row(r, R, [&] { return one(R, cfg.h_list.front()); });
    } else {
        r.notes.push_back("R = " + fmt("%g", cfg.R_fixed));
        for (double h : cfg.h_list) add_row(r, h, [&] { return one(cfg.R_fixed, h); });
    }
    return r;
}

ErrorReport run_domain_rmse(const ExperimentConfig& cfg, Field* exact_out = nullptr) {
    const auto p = ekman_problem(cfg.a, cfg.nu);
    const auto zs = cfg.z.points();
    const auto ts = cfg.t.points();
    const Field exact = exact_grid(cfg.a, cfg.nu, kUnitFlux, zs, ts, cfg.oracle(), cfg.threads);
    auto r = make_report(cfg, "R", {"rmse_u1", "rmse_u2"});
    r.notes.push_back("h = " + fmt("%g", cfg.h_list.front()) + ", " + std::to_string(zs.size()) +
                      " z points x " + std::to_string(ts.size()) + " t points");
    for (double R : cfg.R_list) {
        add_row(r, R, [&] {
            const auto grid = QuadratureGrid::from_step(R, cfg.h_list.front(), cfg.layout);
            const auto e = rmse(midpoint_field(p, grid, zs, ts, cfg.kernel(), cfg.threads), exact);
            return std::vector<double>{e.u1, e.u2};
        });
    }
    if (exact_out) *exact_out = exact;
    return r;
}

MomentField mc_run(const ExperimentConfig& cfg, const RandomCoefficients& coeffs, int K, double R) {
    MonteCarloConfig mc;
    mc.K = K;
    mc.seed = cfg.seed;
    mc.grid = QuadratureGrid::from_step(R, cfg.h_list.front(), cfg.layout);
    mc.z_grid = cfg.profile_z.points();
    mc.t = cfg.profile_t;
    mc.threads = cfg.threads;
    mc.kernel = cfg.kernel();
    return mc_moments(coeffs, mc);
}

MomentField reference_for(const ExperimentConfig& cfg, const RandomCoefficients& coeffs) {
    return reference_moments(coeffs, cfg.profile_z.points(), cfg.profile_t, cfg.reference_nodes,
                             cfg.oracle(), cfg.threads);
}

std::vector<double> moment_metrics(const MomentField& mc, const MomentField& ref, bool stddev) {
    const auto e = stddev ? rmse(mc.stddev, ref.stddev) : rmse(mc.mean, ref.mean);
    return {e.u1, e.u2};
}

ErrorReport run_moment_sweep(const ExperimentConfig& cfg, bool sweep_k, bool stddev) {
    const auto coeffs = cfg.coefficients();
    check_spectral_condition(coeffs);
    const MomentField ref = reference_for(cfg, coeffs);
    const std::string prefix = stddev ? "rmse_std_u" : "rmse_mean_u";
    auto r = make_report(cfg, sweep_k ? "K" : "R", {prefix + "1", prefix + "2"});
    r.notes.push_back("a ~ " + coeffs.a_dist.describe() + ", nu ~ " + coeffs.nu_dist.describe());
    r.notes.push_back("seed = " + std::to_string(cfg.seed) + ", t = " + fmt("%g", cfg.profile_t) +
                      ", h = " + fmt("%g", cfg.h_list.front()));
    if (sweep_k) {
        r.notes.push_back("R = " + fmt("%g", cfg.R_fixed));
        for (int K : cfg.K_list) {
            add_row(r, K, [&] { return moment_metrics(mc_run(cfg, coeffs, K, cfg.R_fixed), ref, stddev); });
        }
    } else {
        r.notes.push_back("K = " + std::to_string(cfg.K_fixed));
        for (double R : cfg.R_list) {
            add_row(r, R, [&] { return moment_metrics(mc_run(cfg, coeffs, cfg.K_fixed, R), ref, stddev); });
        }
    }
    return r;
}

CsvTable surface_table(const Field& f, const std::string& name) {
    CsvTable t{name, {}, {"z", "t", "u1", "u2"}, {}};
    for (std::size_t it = 0; it < f.nt(); ++it) {
        for (std::size_t iz = 0; iz < f.nz(); ++iz) {
            const Vector2& u = f.at(it, iz);
            t.rows.push_back({f.z_grid()[iz], f.t_grid()[it], u.v1, u.v2});
        }
    }
    return t;
}

ExperimentOutput run_figures(const ExperimentConfig& cfg) {
    ExperimentOutput out;

    // Exact surfaces and RMSE against R.
    Field exact;
    ErrorReport rmse_report = run_domain_rmse(cfg, &exact);
    out.tables.push_back(surface_table(exact, "figure_exact_surface"));
    CsvTable rmse_table = rmse_report.table();
    rmse_table.name = "figure_rmse_vs_R";
    out.tables.push_back(std::move(rmse_table));

    // Reference moment profiles.
    const auto coeffs = cfg.coefficients();
    check_spectral_condition(coeffs);
    const MomentField ref = reference_for(cfg, coeffs);
    out.tables.push_back(moments_table(ref, "figure_reference_moments"));

    // Pointwise absolute errors of the MC moments for each K.
    CsvTable by_k{"figure_mc_error_by_K", {"R = " + fmt("%g", cfg.R_fixed)},
                  {"K", "z", "abs_err_mean_u1", "abs_err_mean_u2", "abs_err_std_u1", "abs_err_std_u2"},
                  {}};
    for (int K : cfg.K_list) {
        const MomentField mc = mc_run(cfg, coeffs, K, cfg.R_fixed);
        for (std::size_t i = 0; i < mc.z_grid.size(); ++i) {
            const auto em = abs_error(mc.mean[i], ref.mean[i]);
            const auto es = abs_error(mc.stddev[i], ref.stddev[i]);
            by_k.rows.push_back({static_cast<double>(K), mc.z_grid[i], em.u1, em.u2, es.u1, es.u2});
        }
    }
    out.tables.push_back(std::move(by_k));

    // MC expectation profiles as R grows.
    CsvTable by_r{"figure_mc_mean_by_R", {"K = " + std::to_string(cfg.K_fixed)},
                  {"R", "z", "mean_u1", "mean_u2"}, {}};
    for (double R : cfg.R_list) {
        const MomentField mc = mc_run(cfg, coeffs, cfg.K_fixed, R);
        for (std::size_t i = 0; i < mc.z_grid.size(); ++i) {
            by_r.rows.push_back({R, mc.z_grid[i], mc.mean[i].v1, mc.mean[i].v2});
        }
    }
    out.tables.push_back(std::move(by_r));
    for (auto& t : out.tables) {
        t.comments.insert(t.comments.begin(), "seed = " + std::to_string(cfg.seed));
    }
    out.report.experiment = "figures";
    return out;
}

}  // namespace

CsvTable ErrorReport::table() const {
    CsvTable t;
    t.name = experiment;
    t.comments = notes;
    t.header.push_back(sweep_name);
    t.header.insert(t.header.end(), metric_names.begin(), metric_names.end());
    for (const auto& row : rows) {
        std::vector<double> values{row.sweep_value};
        values.insert(values.end(), row.metrics.begin(), row.metrics.end());
        t.rows.push_back(std::move(values));
    }
    return t;
}

CsvTable ErrorReport::timing_table() const {
    CsvTable t;
    t.name = experiment + "_timing";
    t.comments = {"wall-clock seconds, informational only"};
    t.header = {sweep_name, "seconds"};
    for (const auto& row : rows) t.rows.push_back({row.sweep_value, row.seconds});
    return t;
}

Field midpoint_field(const CoupledProblem& p, const QuadratureGrid& grid,
                     const std::vector<double>& z_grid, const std::vector<double>& t_grid,
                     const KernelOptions& opts, int threads) {
    Field f(z_grid, t_grid);
    detail::parallel_for(t_grid.size(), threads, [&](std::size_t it) {
        const KernelSweep sweep = sweep_kernel(p, grid, t_grid[it], opts, 1);
        for (std::size_t iz = 0; iz < z_grid.size(); ++iz) f.at(it, iz) = invert_sweep(sweep, z_grid[iz]);
    });
    return f;
}

MomentField run_moments(const ExperimentConfig& cfg) {
    validate(cfg);
    return mc_run(cfg, cfg.coefficients(), cfg.K_fixed, cfg.R_fixed);
}

CsvTable moments_table(const MomentField& m, const std::string& name) {
    CsvTable t{name,
               {"t = " + fmt("%g", m.t)},
               {"z", "mean_u1", "mean_u2", "std_u1", "std_u2"},
               {}};
    if (m.K_used > 0) t.comments.push_back("K = " + std::to_string(m.K_used));
    for (std::size_t i = 0; i < m.z_grid.size(); ++i) {
        t.rows.push_back({m.z_grid[i], m.mean[i].v1, m.mean[i].v2, m.stddev[i].v1, m.stddev[i].v2});
    }
    return t;
}

ExperimentOutput run_experiment(const ExperimentConfig& cfg) {
    validate(cfg);
    ExperimentOutput out;
    switch (cfg.id) {
        case ExperimentId::kTable1: out.report = run_gauss_laguerre(cfg); break;
        case ExperimentId::kTable2: out.report = run_midpoint_point(cfg, true); break;
        case ExperimentId::kTable3: out.report = run_midpoint_point(cfg, false); break;
        case ExperimentId::kTable4: out.report = run_domain_rmse(cfg); break;
        case ExperimentId::kTable5: out.report = run_moment_sweep(cfg, true, false); break;
        case ExperimentId::kTable6: out.report = run_moment_sweep(cfg, true, true); break;
        case ExperimentId::kTable7: out.report = run_moment_sweep(cfg, false, false); break;
        case ExperimentId::kTable8: out.report = run_moment_sweep(cfg, false, true); break;
        case ExperimentId::kFigures: return run_figures(cfg);
        case ExperimentId::kCustom: {
            const auto coeffs = cfg.coefficients();
            const MomentField mc = run_moments(cfg);
            const MomentField ref = reference_for(cfg, coeffs);
            out.tables.push_back(moments_table(mc, "custom_moments"));
            out.tables.push_back(moments_table(ref, "custom_reference_moments"));
            out.report = make_report(cfg, "K", {"rmse_mean_u1", "rmse_mean_u2", "rmse_std_u1", "rmse_std_u2"});
            auto m = moment_metrics(mc, ref, false);
            const auto s = moment_metrics(mc, ref, true);
            m.insert(m.end(), s.begin(), s.end());
            out.report.rows.push_back({static_cast<double>(cfg.K_fixed), m, 0.0});
            out.tables.push_back(out.report.table());
            return out;
        }
    }
    out.tables.push_back(out.report.table());
    out.tables.push_back(out.report.timing_table());
    return out;
}

std::vector<std::string> write_outputs(const ExperimentOutput& out, const ExperimentConfig& cfg) {
    const std::string stamp = cfg.timestamp ? utc_timestamp() : std::string{};
    std::vector<std::string> paths;
    for (const auto& t : out.tables) paths.push_back(write_csv_file(cfg.out_dir, t, stamp));
    return paths;
}

}  // namespace rcpde::harness
