#pragma once

#include <string>
#include <vector>

#include "rcpde/harness/config.hpp"
#include "rcpde/harness/csv.hpp"
#include "rcpde/monte_carlo.hpp"

namespace rcpde::harness {

/// Sweep results: one row per sweep value, in sweep order.
struct ErrorReport {
    std::string experiment;
    std::string sweep_name;                 // "M", "R", "h" or "K"
    std::vector<std::string> metric_names;  // e.g. abs_err_u1, abs_err_u2
    struct Row {
        double sweep_value = 0.0;
        std::vector<double> metrics;
        double seconds = 0.0;  // wall clock, informational only
    };
    std::vector<Row> rows;
    std::vector<std::string> notes;

    /// Deterministic table (no timing column).
    CsvTable table() const;
    /// Sidecar with the wall-clock column.
    CsvTable timing_table() const;
};

struct ExperimentOutput {
    ErrorReport report;           // empty rows for figures/custom
    std::vector<CsvTable> tables; // everything to write, report tables included
};

/// Runs one experiment. Validates the config first (ConfigError) and the
/// hypothesis checks for random runs (SpectralConditionViolated).
ExperimentOutput run_experiment(const ExperimentConfig& cfg);

/// Writes every table of `out` into cfg.out_dir. Returns written paths.
std::vector<std::string> write_outputs(const ExperimentOutput& out, const ExperimentConfig& cfg);

/// Midpoint approximation over the (z, t) grid of the config; t = 0 rows
/// hold the transformed initial condition, which is zero for the Ekman preset.
Field midpoint_field(const CoupledProblem& p, const QuadratureGrid& grid,
                     const std::vector<double>& z_grid, const std::vector<double>& t_grid,
                     const KernelOptions& opts = {}, int threads = 1);

/// Single Monte Carlo run on the profile grid of `cfg` with K_fixed, R_fixed
/// and h_list.front().
MomentField run_moments(const ExperimentConfig& cfg);

CsvTable moments_table(const MomentField& m, const std::string& name);

}  // namespace rcpde::harness
