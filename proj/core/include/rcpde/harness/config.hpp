#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rcpde/distributions.hpp"
#include "rcpde/monte_carlo.hpp"
#include "rcpde/quadrature.hpp"

namespace rcpde::harness {

enum class ExperimentId {
    kTable1,
    kTable2,
    kTable3,
    kTable4,
    kTable5,
    kTable6,
    kTable7,
    kTable8,
    kFigures,
    kCustom,
};

/// Throws ConfigError for unknown names.
ExperimentId parse_experiment_id(const std::string& name);
std::string to_string(ExperimentId id);
const std::vector<std::string>& experiment_names();

NodeLayout parse_layout(const std::string& name);
std::string to_string(NodeLayout layout);

/// Declarative description of one truncated random coefficient.
struct DistributionSpec {
    std::string kind = "normal";  // normal | gamma | point
    double first = 0.0;           // mu | shape | value
    double second = 1.0;          // sigma | rate or scale
    GammaParam gamma_param = GammaParam::kRate;
    double lo = 0.0;
    double hi = 1.0;

    TruncatedDistribution build() const;
};

/// start:step:stop, inclusive of stop when it falls on the lattice.
struct Range {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    std::vector<double> points() const;
};

struct ExperimentConfig {
    ExperimentId id = ExperimentId::kCustom;

    // Deterministic Ekman parameters.
    double a = 1.0;
    double nu = 1.0;

    // Random coefficients.
    DistributionSpec a_dist{"normal", 2.0, 0.1, GammaParam::kRate, 0.8, 1.2};
    DistributionSpec nu_dist{"gamma", 4.0, 2.0, GammaParam::kRate, 0.5, 1.5};

    // Frequency grid sweeps.
    NodeLayout layout = NodeLayout::kMidpoint;
    std::vector<double> R_list{20.0};
    std::vector<double> h_list{0.05};
    std::vector<int> M_list{};
    double R_fixed = 20.0;

    // Monte Carlo.
    std::vector<int> K_list{1600};
    int K_fixed = 1600;
    std::uint64_t seed = 20200101;
    int reference_nodes = 32;

    // Deterministic evaluation grid (tables 1-4, solution surfaces).
    Range z{5.0, 5.0, 0.05};
    Range t{1.0, 1.0, 0.01};

    // Moment profiles (tables 5-8, moment figures, custom runs).
    Range profile_z{0.0, 5.0, 0.1};
    double profile_t = 1.0;

    int oracle_panels = 20000;
    int kernel_s_nodes = 2000;

    // Output.
    std::string out_dir = ".";
    int threads = 1;
    bool timestamp = true;

    RandomCoefficients coefficients() const;
    OracleConfig oracle() const;
    KernelOptions kernel() const;
};

/// Built-in configuration that reproduces the named benchmark.
ExperimentConfig default_config(ExperimentId id);

/// Overlays YAML text on `base`. Unknown keys are rejected, and an
/// `experiment` key must name base.id. Throws ConfigError with the dotted
/// key path of the first problem.
ExperimentConfig parse_config(const std::string& yaml_text, ExperimentConfig base);

/// parse_config on the contents of a file.
ExperimentConfig load_config(const std::string& path, ExperimentConfig base);

/// Reads the required `experiment` key, starts from default_config of that
/// id and overlays the rest of the file.
ExperimentConfig load_experiment(const std::string& path);

/// Field-level checks: nonempty lists, positive steps, ordered ranges.
void validate(const ExperimentConfig& cfg);

}  // namespace rcpde::harness
