#include "rcpde/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rcpde/errors.hpp"
#include "rcpde/parallel.hpp"
#include "rcpde/problem.hpp"
#include "rcpde/rng.hpp"

namespace rcpde {

namespace {

constexpr std::size_t kChunk = 64;

// Welford accumulator over a z profile of Vector2 values.
struct ProfileStats {
    std::size_t count = 0;
    std::vector<Vector2> mean;
    std::vector<Vector2> m2;

    explicit ProfileStats(std::size_t nz) : mean(nz), m2(nz) {}

    void push(const std::vector<Vector2>& x) {
        ++count;
        const double inv = 1.0 / static_cast<double>(count);
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double d1 = x[i].v1 - mean[i].v1;
            const double d2 = x[i].v2 - mean[i].v2;
            mean[i].v1 += d1 * inv;
            mean[i].v2 += d2 * inv;
            m2[i].v1 += d1 * (x[i].v1 - mean[i].v1);
            m2[i].v2 += d2 * (x[i].v2 - mean[i].v2);
        }
    }

    // Chan et al. pairwise merge.
    void merge(const ProfileStats& o) {
        if (o.count == 0) return;
        if (count == 0) {
            *this = o;
            return;
        }
        const double na = static_cast<double>(count);
        const double nb = static_cast<double>(o.count);
        const double n = na + nb;
        for (std::size_t i = 0; i < mean.size(); ++i) {
            const double d1 = o.mean[i].v1 - mean[i].v1;
            const double d2 = o.mean[i].v2 - mean[i].v2;
            mean[i].v1 += d1 * nb / n;
            mean[i].v2 += d2 * nb / n;
            m2[i].v1 += o.m2[i].v1 + d1 * d1 * na * nb / n;
            m2[i].v2 += o.m2[i].v2 + d2 * d2 * na * nb / n;
        }
        count += o.count;
    }
};

struct QuadRule1d {
    std::vector<double> nodes;
    std::vector<double> weights;
};

QuadRule1d density_rule(const TruncatedDistribution& dist, int n) {
    if (dist.kind() == DistributionKind::kPointMass) return {{dist.lo()}, {1.0}};
    const auto gl = GaussLegendreRule::make(n, dist.lo(), dist.hi());
    QuadRule1d rule{gl.nodes, gl.weights};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) rule.weights[i] *= dist.pdf(rule.nodes[i]);
    return rule;
}

}  // namespace

RandomCoefficients RandomCoefficients::ekman_example() {
    return {TruncatedDistribution::normal(2.0, 0.1, 0.8, 1.2),
            TruncatedDistribution::gamma(4.0, 2.0, 0.5, 1.5, GammaParam::kRate)};
}

double check_spectral_condition(const RandomCoefficients& coeffs) {
    const double b_star = coeffs.nu_dist.lo();
    if (!(b_star > 0.0)) throw SpectralConditionViolated(b_star);
    return b_star;
}

Realization draw_realization(const RandomCoefficients& coeffs, std::uint64_t seed, std::uint64_t k) {
    CounterRng rng(seed, k);
    Realization r;
    r.a = sample(coeffs.a_dist, rng.next_u01());
    r.nu = sample(coeffs.nu_dist, rng.next_u01());
    return r;
}

MomentField mc_moments(const RandomCoefficients& coeffs, const MonteCarloConfig& cfg) {
    if (cfg.K < 2) throw InvalidParameter("mc_moments: K must be >= 2, got " + std::to_string(cfg.K));
    if (cfg.z_grid.empty()) throw InvalidParameter("mc_moments: z grid is empty");
    if (!(cfg.t > 0.0)) throw InvalidParameter("mc_moments: t must be > 0");
    check_spectral_condition(coeffs);
    if (!(coeffs.a_dist.lo() > 0.0)) {
        throw InvalidParameter("mc_moments: the rotation parameter support must be positive");
    }

    const std::vector<double> nodes = cfg.grid.nodes();
    const double weight = 2.0 / std::numbers::pi * cfg.grid.step();
    const std::size_t nz = cfg.z_grid.size();
    std::vector<double> cosines(nz * nodes.size());
    for (std::size_t iz = 0; iz < nz; ++iz) {
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            cosines[iz * nodes.size() + j] = std::cos(nodes[j] * cfg.z_grid[iz]);
        }
    }

    const auto K = static_cast<std::size_t>(cfg.K);
    const std::size_t chunks = (K + kChunk - 1) / kChunk;
    std::vector<ProfileStats> partial(chunks, ProfileStats(nz));

    detail::parallel_for(chunks, cfg.threads, [&](std::size_t c) {
        std::vector<Vector2> profile(nz);
        ProfileStats& acc = partial[c];
        const std::size_t end = std::min(K, (c + 1) * kChunk);
        for (std::size_t k = c * kChunk; k < end; ++k) {
            const Realization r = draw_realization(coeffs, cfg.seed, k);
            const CoupledProblem problem = ekman_problem(r.a, r.nu);
            const KernelSweep sweep = sweep_kernel(problem, cfg.grid, cfg.t, cfg.kernel, 1);
            for (std::size_t iz = 0; iz < nz; ++iz) {
                const double* row = cosines.data() + iz * nodes.size();
                Vector2 sum{};
                for (std::size_t j = 0; j < nodes.size(); ++j) sum += row[j] * sweep.values[j];
                profile[iz] = weight * sum;
            }
            acc.push(profile);
        }
    });

    ProfileStats total(nz);
    for (const auto& p : partial) total.merge(p);

    MomentField out;
    out.z_grid = cfg.z_grid;
    out.t = cfg.t;
    out.mean = total.mean;
    out.stddev.resize(nz);
    const double inv_k = 1.0 / static_cast<double>(total.count);
    for (std::size_t i = 0; i < nz; ++i) {
        out.stddev[i] = {std::sqrt(std::max(0.0, total.m2[i].v1 * inv_k)),
                         std::sqrt(std::max(0.0, total.m2[i].v2 * inv_k))};
    }
    out.K_used = cfg.K;
    out.seed_used = cfg.seed;
    return out;
}

MomentField reference_moments(const RandomCoefficients& coeffs, const std::vector<double>& z_grid,
                              double t, int nodes_per_dim, const OracleConfig& cfg, int threads) {
    if (nodes_per_dim < 8) {
        throw InvalidParameter("reference_moments: nodes_per_dim must be >= 8");
    }
    if (z_grid.empty()) throw InvalidParameter("reference_moments: z grid is empty");
    if (!(t > 0.0)) throw InvalidParameter("reference_moments: t must be > 0");
    cfg.validate();
    check_spectral_condition(coeffs);
    if (!(coeffs.a_dist.lo() > 0.0)) {
        throw InvalidParameter("reference_moments: the rotation parameter support must be positive");
    }

    const QuadRule1d a_rule = density_rule(coeffs.a_dist, nodes_per_dim);
    const QuadRule1d nu_rule = density_rule(coeffs.nu_dist, nodes_per_dim);
    const std::size_t na = a_rule.nodes.size();
    const std::size_t nn = nu_rule.nodes.size();
    const std::size_t nz = z_grid.size();
    const auto panels = static_cast<std::size_t>(cfg.panels);

    // Same rule as exact_solution with g = 1: v-substitution, midpoint panels.
    const double dv = std::sqrt(t) / static_cast<double>(panels);
    std::vector<double> v2(panels);
    for (std::size_t k = 0; k < panels; ++k) {
        const double v = (static_cast<double>(k) + 0.5) * dv;
        v2[k] = v * v;
    }
    std::vector<double> cos_a(na * panels);
    std::vector<double> sin_a(na * panels);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t k = 0; k < panels; ++k) {
            cos_a[i * panels + k] = std::cos(a_rule.nodes[i] * v2[k]);
            sin_a[i * panels + k] = std::sin(a_rule.nodes[i] * v2[k]);
        }
    }

    // solution[j][i][iz]
    std::vector<Vector2> solution(nn * na * nz);
    detail::parallel_for(nn, threads, [&](std::size_t j) {
        const double nu = nu_rule.nodes[j];
        const double scale = 2.0 * std::sqrt(nu / std::numbers::pi) * dv;
        std::vector<double> damp(panels);
        for (std::size_t iz = 0; iz < nz; ++iz) {
            const double gauss_scale = z_grid[iz] * z_grid[iz] / (4.0 * nu);
            for (std::size_t k = 0; k < panels; ++k) damp[k] = std::exp(-gauss_scale / v2[k]);
            for (std::size_t i = 0; i < na; ++i) {
                const double* c = cos_a.data() + i * panels;
                const double* s = sin_a.data() + i * panels;
                double s1 = 0.0;
                double s2 = 0.0;
                for (std::size_t k = 0; k < panels; ++k) {
                    s1 += damp[k] * c[k];
                    s2 += damp[k] * s[k];
                }
                solution[(j * na + i) * nz + iz] = {scale * s1, -scale * s2};
            }
        }
    });

    std::vector<Vector2> first(nz);
    std::vector<Vector2> second(nz);
    for (std::size_t j = 0; j < nn; ++j) {
        for (std::size_t i = 0; i < na; ++i) {
            const double w = nu_rule.weights[j] * a_rule.weights[i];
            for (std::size_t iz = 0; iz < nz; ++iz) {
                const Vector2& u = solution[(j * na + i) * nz + iz];
                first[iz].v1 += w * u.v1;
                first[iz].v2 += w * u.v2;
                second[iz].v1 += w * u.v1 * u.v1;
                second[iz].v2 += w * u.v2 * u.v2;
            }
        }
    }

    MomentField out;
    out.z_grid = z_grid;
    out.t = t;
    out.mean = first;
    out.stddev.resize(nz);
    for (std::size_t iz = 0; iz < nz; ++iz) {
        out.stddev[iz] = {std::sqrt(std::max(0.0, second[iz].v1 - first[iz].v1 * first[iz].v1)),
                          std::sqrt(std::max(0.0, second[iz].v2 - first[iz].v2 * first[iz].v2))};
    }
    return out;
}

}  // namespace rcpde
