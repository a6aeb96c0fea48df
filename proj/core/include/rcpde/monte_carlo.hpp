#pragma once

#include <cstdint>
#include <vector>

#include "rcpde/distributions.hpp"
#include "rcpde/ekman_oracle.hpp"
#include "rcpde/kernel.hpp"
#include "rcpde/linalg.hpp"
#include "rcpde/quadrature.hpp"

namespace rcpde {

/// Independent random Ekman coefficients a(xi) and nu(xi).
struct RandomCoefficients {
    TruncatedDistribution a_dist;
    TruncatedDistribution nu_dist;

    /// a ~ N(2, 0.1) on [0.8, 1.2], nu ~ Gamma(shape 4, rate 2) on [0.5, 1.5].
    static RandomCoefficients ekman_example();
};

/// b* = inf lambda_min((B + B^T)/2) = lower end of the nu support, since
/// B = nu I. Throws SpectralConditionViolated when b* <= 0.
double check_spectral_condition(const RandomCoefficients& coeffs);

struct Realization {
    double a = 0.0;
    double nu = 0.0;
};

/// Draw k of the stream seeded by `seed`: a first, then nu.
Realization draw_realization(const RandomCoefficients& coeffs, std::uint64_t seed, std::uint64_t k);

struct MonteCarloConfig {
    int K = 1600;
    std::uint64_t seed = 0;
    QuadratureGrid grid{20.0, 400};
    std::vector<double> z_grid;
    double t = 1.0;
    int threads = 1;
    KernelOptions kernel;
};

/// Pointwise expectation and standard deviation over z at a fixed t.
struct MomentField {
    std::vector<double> z_grid;
    double t = 0.0;
    std::vector<Vector2> mean;
    std::vector<Vector2> stddev;
    int K_used = 0;
    std::uint64_t seed_used = 0;
};

/// Monte Carlo moments of the midpoint approximation of u_R(z, t).
///
/// Each realization k draws (a_k, nu_k) from its own substream, evaluates the
/// kernel once per frequency node and forms the midpoint sum for every z.
/// Mean and squared deviations are accumulated with Welford updates over
/// fixed-size chunks that are merged in chunk order, so the result is
/// bit-identical for any `threads`. The variance uses divisor K.
///
/// Throws InvalidParameter for K < 2 or an empty z grid, and
/// SpectralConditionViolated via check_spectral_condition.
MomentField mc_moments(const RandomCoefficients& coeffs, const MonteCarloConfig& cfg);

/// Moments of the exact solution by tensor Gauss-Legendre quadrature over
/// the (a, nu) support, weighted with the truncated densities. Point-mass
/// coefficients collapse to a single node. std comes from E[u^2] - E[u]^2
/// with negative round-off clamped to zero.
MomentField reference_moments(const RandomCoefficients& coeffs, const std::vector<double>& z_grid,
                              double t, int nodes_per_dim, const OracleConfig& cfg = {},
                              int threads = 1);

}  // namespace rcpde
