#include "rcpde/harness/config.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "rcpde/errors.hpp"
#include "rcpde/field.hpp"

namespace rcpde::harness {

namespace {

struct NameId {
    const char* name;
    ExperimentId id;
};

constexpr NameId kIds[] = {
    {"table1", ExperimentId::kTable1}, {"table2", ExperimentId::kTable2},
    {"table3", ExperimentId::kTable3}, {"table4", ExperimentId::kTable4},
    {"table5", ExperimentId::kTable5}, {"table6", ExperimentId::kTable6},
    {"table7", ExperimentId::kTable7}, {"table8", ExperimentId::kTable8},
    {"figures", ExperimentId::kFigures}, {"custom", ExperimentId::kCustom},
};

std::string join(const std::string& prefix, const std::string& key) {
    return prefix.empty() ? key : prefix + "." + key;
}

void check_keys(const YAML::Node& node, const std::string& path,
                const std::set<std::string>& allowed) {
    if (!node.IsMap()) throw ConfigError(path.empty() ? "<root>" : path, "expected a mapping");
    for (const auto& kv : node) {
        const auto key = kv.first.as<std::string>();
        if (!allowed.count(key)) throw ConfigError(join(path, key), "unknown key");
    }
}

template <typename T>
T read(const YAML::Node& node, const std::string& path) {
    try {
        return node.as<T>();
    } catch (const YAML::Exception&) {
        throw ConfigError(path, "could not parse value '" + YAML::Dump(node) + "'");
    }
}

template <typename T>
std::vector<T> read_list(const YAML::Node& node, const std::string& path) {
    if (node.IsScalar()) return {read<T>(node, path)};
    if (!node.IsSequence()) throw ConfigError(path, "expected a list");
    std::vector<T> out;
    for (std::size_t i = 0; i < node.size(); ++i) {
        out.push_back(read<T>(node[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

template <typename T>
void maybe(const YAML::Node& parent, const char* key, const std::string& path, T& dst) {
    if (const YAML::Node n = parent[key]) dst = read<T>(n, join(path, key));
}

template <typename T>
void maybe_list(const YAML::Node& parent, const char* key, const std::string& path,
                std::vector<T>& dst) {
    if (const YAML::Node n = parent[key]) dst = read_list<T>(n, join(path, key));
}

void parse_distribution(const YAML::Node& node, const std::string& path, DistributionSpec& d) {
    check_keys(node, path, {"kind", "mu", "sigma", "shape", "rate", "scale", "value", "lo", "hi"});
    maybe(node, "kind", path, d.kind);
    if (d.kind == "normal") {
        maybe(node, "mu", path, d.first);
        maybe(node, "sigma", path, d.second);
    } else if (d.kind == "gamma") {
        maybe(node, "shape", path, d.first);
        if (node["rate"] && node["scale"]) {
            throw ConfigError(join(path, "scale"), "give either rate or scale, not both");
        }
        if (node["rate"]) {
            d.gamma_param = GammaParam::kRate;
            maybe(node, "rate", path, d.second);
        } else if (node["scale"]) {
            d.gamma_param = GammaParam::kScale;
            maybe(node, "scale", path, d.second);
        }
    } else if (d.kind == "point") {
        maybe(node, "value", path, d.first);
        d.lo = d.hi = d.first;
    } else {
        throw ConfigError(join(path, "kind"), "expected normal, gamma or point, got '" + d.kind + "'");
    }
    if (d.kind != "point") {
        maybe(node, "lo", path, d.lo);
        maybe(node, "hi", path, d.hi);
    }
}

void parse_range(const YAML::Node& node, const std::string& path, Range& r) {
    if (node.IsScalar()) {
        r.start = r.stop = read<double>(node, path);
        return;
    }
    check_keys(node, path, {"start", "stop", "step"});
    maybe(node, "start", path, r.start);
    maybe(node, "stop", path, r.stop);
    maybe(node, "step", path, r.step);
}

void require(bool ok, const std::string& field, const std::string& message) {
    if (!ok) throw ConfigError(field, message);
}

void validate_range(const Range& r, const std::string& path) {
    require(std::isfinite(r.start) && std::isfinite(r.stop), path, "range ends must be finite");
    require(r.step > 0.0, join(path, "step"), "step must be positive");
    require(r.start <= r.stop, path, "start must not exceed stop");
}

void validate_distribution(const DistributionSpec& d, const std::string& path) {
    try {
        (void)d.build();
    } catch (const InvalidParameter& e) {
        throw ConfigError(path, e.what());
    }
}

}  // namespace

ExperimentId parse_experiment_id(const std::string& name) {
    for (const auto& e : kIds) {
        if (name == e.name) return e.id;
    }
    throw ConfigError("experiment", "unknown experiment '" + name + "'");
}

std::string to_string(ExperimentId id) {
    for (const auto& e : kIds) {
        if (id == e.id) return e.name;
    }
    return "custom";
}

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& e : kIds) v.emplace_back(e.name);
        return v;
    }();
    return names;
}

NodeLayout parse_layout(const std::string& name) {
    if (name == "midpoint") return NodeLayout::kMidpoint;
    if (name == "shifted") return NodeLayout::kShiftedLinspace;
    throw ConfigError("grid.layout", "expected midpoint or shifted, got '" + name + "'");
}

std::string to_string(NodeLayout layout) {
    return layout == NodeLayout::kMidpoint ? "midpoint" : "shifted";
}

TruncatedDistribution DistributionSpec::build() const {
    if (kind == "normal") return TruncatedDistribution::normal(first, second, lo, hi);
    if (kind == "gamma") return TruncatedDistribution::gamma(first, second, lo, hi, gamma_param);
    if (kind == "point") return TruncatedDistribution::point_mass(first);
    throw InvalidParameter("unknown distribution kind '" + kind + "'");
}

std::vector<double> Range::points() const { return uniform_grid(start, stop, step); }

RandomCoefficients ExperimentConfig::coefficients() const {
    return {a_dist.build(), nu_dist.build()};
}

OracleConfig ExperimentConfig::oracle() const {
    OracleConfig c;
    c.panels = oracle_panels;
    return c;
}

KernelOptions ExperimentConfig::kernel() const {
    KernelOptions k;
    k.s_nodes = kernel_s_nodes;
    return k;
}

ExperimentConfig default_config(ExperimentId id) {
    ExperimentConfig c;
    c.id = id;
    const std::vector<double> r_to_30{5, 10, 15, 20, 25, 30};
    const std::vector<double> r_to_25{5, 10, 15, 20, 25};
    switch (id) {
        case ExperimentId::kTable1:
            c.M_list.clear();
            for (int m = 1; m <= 15; ++m) c.M_list.push_back(m);
            break;
        case ExperimentId::kTable2:
            c.layout = NodeLayout::kShiftedLinspace;
            c.R_list = r_to_30;
            break;
        case ExperimentId::kTable3:
            c.layout = NodeLayout::kShiftedLinspace;
            c.h_list = {0.2, 0.1, 0.05, 0.025, 0.0125};
            break;
        case ExperimentId::kTable4:
            c.layout = NodeLayout::kShiftedLinspace;
            c.R_list = r_to_30;
            c.z = {0.0, 5.0, 0.05};
            c.t = {0.0, 1.0, 0.01};
            break;
        case ExperimentId::kTable5:
        case ExperimentId::kTable6:
            c.layout = NodeLayout::kShiftedLinspace;
            c.K_list = {200, 400, 800, 1600, 3200, 6400, 12800};
            break;
        case ExperimentId::kTable7:
        case ExperimentId::kTable8:
            c.layout = NodeLayout::kShiftedLinspace;
            c.R_list = r_to_25;
            break;
        case ExperimentId::kFigures:
            c.layout = NodeLayout::kShiftedLinspace;
            c.R_list = r_to_25;
            c.K_list = {400, 1600, 12800};
            c.z = {0.0, 5.0, 0.05};
            c.t = {0.0, 1.0, 0.01};
            break;
        case ExperimentId::kCustom:
            break;
    }
    return c;
}

ExperimentConfig parse_config(const std::string& yaml_text, ExperimentConfig base) {
    YAML::Node root;
    try {
        root = YAML::Load(yaml_text);
    } catch (const YAML::Exception& e) {
        throw ConfigError("<root>", std::string("YAML syntax error: ") + e.what());
    }
    if (root.IsNull()) return base;
    check_keys(root, "", {"experiment", "problem", "random", "grid", "monte_carlo", "evaluation",
                          "numerics", "output"});

    if (const YAML::Node n = root["experiment"]) {
        const auto name = read<std::string>(n, "experiment");
        if (parse_experiment_id(name) != base.id) {
            throw ConfigError("experiment", "file is for '" + name + "' but the run is '" +
                                                to_string(base.id) + "'");
        }
    }
    if (const YAML::Node n = root["problem"]) {
        check_keys(n, "problem", {"a", "nu"});
        maybe(n, "a", "problem", base.a);
        maybe(n, "nu", "problem", base.nu);
    }
    if (const YAML::Node n = root["random"]) {
        check_keys(n, "random", {"a", "nu"});
        if (n["a"]) parse_distribution(n["a"], "random.a", base.a_dist);
        if (n["nu"]) parse_distribution(n["nu"], "random.nu", base.nu_dist);
    }
    if (const YAML::Node n = root["grid"]) {
        check_keys(n, "grid", {"layout", "R", "h", "M", "R_fixed"});
        if (n["layout"]) base.layout = parse_layout(read<std::string>(n["layout"], "grid.layout"));
        maybe_list(n, "R", "grid", base.R_list);
        maybe_list(n, "h", "grid", base.h_list);
        maybe_list(n, "M", "grid", base.M_list);
        maybe(n, "R_fixed", "grid", base.R_fixed);
    }
    if (const YAML::Node n = root["monte_carlo"]) {
        check_keys(n, "monte_carlo", {"K", "K_fixed", "seed", "reference_nodes"});
        maybe_list(n, "K", "monte_carlo", base.K_list);
        maybe(n, "K_fixed", "monte_carlo", base.K_fixed);
        maybe(n, "seed", "monte_carlo", base.seed);
        maybe(n, "reference_nodes", "monte_carlo", base.reference_nodes);
    }
    if (const YAML::Node n = root["evaluation"]) {
        check_keys(n, "evaluation", {"z", "t", "profile_z", "profile_t"});
        if (n["z"]) parse_range(n["z"], "evaluation.z", base.z);
        if (n["t"]) parse_range(n["t"], "evaluation.t", base.t);
        if (n["profile_z"]) parse_range(n["profile_z"], "evaluation.profile_z", base.profile_z);
        maybe(n, "profile_t", "evaluation", base.profile_t);
    }
    if (const YAML::Node n = root["numerics"]) {
        check_keys(n, "numerics", {"oracle_panels", "kernel_s_nodes"});
        maybe(n, "oracle_panels", "numerics", base.oracle_panels);
        maybe(n, "kernel_s_nodes", "numerics", base.kernel_s_nodes);
    }
    if (const YAML::Node n = root["output"]) {
        check_keys(n, "output", {"dir", "threads", "timestamp"});
        maybe(n, "dir", "output", base.out_dir);
        maybe(n, "threads", "output", base.threads);
        maybe(n, "timestamp", "output", base.timestamp);
    }
    return base;
}

ExperimentConfig load_config(const std::string& path, ExperimentConfig base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("<file>", "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), std::move(base));
}

ExperimentConfig load_experiment(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("<file>", "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw ConfigError("<root>", std::string("YAML syntax error: ") + e.what());
    }
    if (!root.IsMap() || !root["experiment"]) throw ConfigError("experiment", "missing key");
    const auto id = parse_experiment_id(read<std::string>(root["experiment"], "experiment"));
    return parse_config(text, default_config(id));
}

void validate(const ExperimentConfig& cfg) {
    require(cfg.a > 0.0 && std::isfinite(cfg.a), "problem.a", "must be positive");
    require(cfg.nu > 0.0 && std::isfinite(cfg.nu), "problem.nu", "must be positive");
    validate_distribution(cfg.a_dist, "random.a");
    validate_distribution(cfg.nu_dist, "random.nu");

    require(!cfg.R_list.empty(), "grid.R", "list must be nonempty");
    for (double r : cfg.R_list) require(r > 0.0 && std::isfinite(r), "grid.R", "entries must be positive");
    require(!cfg.h_list.empty(), "grid.h", "list must be nonempty");
    for (double h : cfg.h_list) require(h > 0.0 && std::isfinite(h), "grid.h", "entries must be positive");
    require(cfg.R_fixed > 0.0, "grid.R_fixed", "must be positive");
    for (int m : cfg.M_list) require(m >= 1 && m <= 64, "grid.M", "entries must lie in 1..64");
    if (cfg.id == ExperimentId::kTable1) require(!cfg.M_list.empty(), "grid.M", "list must be nonempty");

    require(!cfg.K_list.empty(), "monte_carlo.K", "list must be nonempty");
    for (int k : cfg.K_list) require(k >= 2, "monte_carlo.K", "entries must be >= 2");
    require(cfg.K_fixed >= 2, "monte_carlo.K_fixed", "must be >= 2");
    require(cfg.reference_nodes >= 8, "monte_carlo.reference_nodes", "must be >= 8");

    validate_range(cfg.z, "evaluation.z");
    validate_range(cfg.t, "evaluation.t");
    require(cfg.z.start >= 0.0, "evaluation.z", "z must be >= 0");
    require(cfg.t.start >= 0.0, "evaluation.t", "t must be >= 0");
    validate_range(cfg.profile_z, "evaluation.profile_z");
    require(cfg.profile_z.start >= 0.0, "evaluation.profile_z", "z must be >= 0");
    require(cfg.profile_t > 0.0, "evaluation.profile_t", "must be positive");

    require(cfg.oracle_panels >= 100, "numerics.oracle_panels", "must be >= 100");
    require(cfg.kernel_s_nodes >= 1, "numerics.kernel_s_nodes", "must be >= 1");
    require(cfg.threads >= 1, "output.threads", "must be >= 1");
    require(!cfg.out_dir.empty(), "output.dir", "must be nonempty");

    // Every (R, h) pair used must give an integer node count.
    std::vector<double> radii = cfg.R_list;
    radii.push_back(cfg.R_fixed);
    for (double r : radii) {
        for (double h : cfg.h_list) {
            try {
                (void)QuadratureGrid::from_step(r, h, cfg.layout);
            } catch (const InvalidParameter& e) {
                throw ConfigError("grid.h", e.what());
            }
        }
    }
}

}  // namespace rcpde::harness
