#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "rcpde/distributions.hpp"
#include "rcpde/errors.hpp"
#include "rcpde/monte_carlo.hpp"
#include "rcpde/rng.hpp"

using namespace rcpde;

namespace {

const double kAlmostOne = std::nextafter(1.0, 0.0);

}  // namespace

TEST_CASE("quantile endpoints") {
    const auto dists = {TruncatedDistribution::normal(2, 0.1, 0.8, 1.2),
                        TruncatedDistribution::gamma(4, 2, 0.5, 1.5),
                        TruncatedDistribution::normal(0, 1, -1, 1),
                        TruncatedDistribution::gamma(2, 1, 5, 9, GammaParam::kScale)};
    for (const auto& d : dists) {
        CHECK(sample(d, 0.0) == doctest::Approx(d.lo()).epsilon(1e-9));
        CHECK(sample(d, kAlmostOne) == doctest::Approx(d.hi()).epsilon(1e-9));
        double prev = d.lo();
        for (double u = 0.0; u < 1.0; u += 0.01) {
            const double x = sample(d, u);
            CHECK(x >= prev);
            CHECK(x <= d.hi());
            prev = x;
        }
    }
    CHECK_THROWS_AS(sample(TruncatedDistribution::normal(0, 1, -1, 1), 1.0), InvalidParameter);
    CHECK_THROWS_AS(sample(TruncatedDistribution::normal(0, 1, -1, 1), -0.1), InvalidParameter);
}

TEST_CASE("symmetric truncated normal") {
    const auto d = TruncatedDistribution::normal(0, 1, -1, 1);
    for (double u = 0.001; u < 1.0; u += 0.0137) CHECK(std::abs(sample(d, u) + sample(d, 1.0 - u)) < 1e-9);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(TruncatedDistribution::normal(0, 0, -1, 1), InvalidParameter);
    CHECK_THROWS_AS(TruncatedDistribution::normal(0, 1, 1, 1), InvalidParameter);
    CHECK_THROWS_AS(TruncatedDistribution::gamma(0, 1, 1, 2), InvalidParameter);
    CHECK_THROWS_AS(TruncatedDistribution::gamma(2, -1, 1, 2), InvalidParameter);
    CHECK_THROWS_AS(TruncatedDistribution::normal(0, 1, 60, 61), InvalidParameter);
}

TEST_CASE("densities integrate to one on the window") {
    const auto n = TruncatedDistribution::normal(2, 0.1, 0.8, 1.2);
    const auto g = TruncatedDistribution::gamma(4, 2, 0.5, 1.5);
    CHECK(oracle::simpson([&](double x) { return n.pdf(x); }, 0.8, 1.2, 2048) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(oracle::simpson([&](double x) { return g.pdf(x); }, 0.5, 1.5, 2048) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(n.pdf(0.7) == 0.0);
    CHECK(g.pdf(1.6) == 0.0);
    CHECK(g.first_param() == 4.0);
    CHECK(g.second_param() == 0.5);
    const auto gs = TruncatedDistribution::gamma(4, 0.5, 0.5, 1.5, GammaParam::kScale);
    CHECK(gs.pdf(1.1) == doctest::Approx(g.pdf(1.1)).epsilon(1e-14));
}

TEST_CASE("empirical mean of a far-tail truncated normal") {
    // N(2, 0.1) on [0.8, 1.2]: the window sits 8 to 12 sigma below the mean.
    const auto d = TruncatedDistribution::normal(2, 0.1, 0.8, 1.2);
    const double mean = oracle::truncated_normal_mean(2, 0.1, 0.8, 1.2);
    const int n = 1000000;
    CounterRng rng(99, 0);
    double s = 0.0, s2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = sample(d, rng.next_u01());
        s += x;
        s2 += x * x;
    }
    const double m = s / n;
    const double se = std::sqrt((s2 / n - m * m) / n);
    CHECK(std::abs(m - mean) <= 3 * se);
}

TEST_CASE("empirical mean of the truncated gamma") {
    const auto d = TruncatedDistribution::gamma(4, 2, 0.5, 1.5);
    auto pdf = [](double x) { return std::pow(2.0, 4) * x * x * x * std::exp(-2 * x) / 6.0; };
    const double mean = oracle::simpson([&](double x) { return x * pdf(x); }, 0.5, 1.5, 256) /
                        oracle::simpson(pdf, 0.5, 1.5, 256);
    const int n = 400000;
    CounterRng rng(5, 1);
    double s = 0.0, s2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = sample(d, rng.next_u01());
        s += x;
        s2 += x * x;
    }
    const double m = s / n;
    CHECK(std::abs(m - mean) <= 3 * std::sqrt((s2 / n - m * m) / n));
}

TEST_CASE("moment condition") {
    auto h_of = [](const TruncatedDistribution& d) {
        const auto r = check_moment_condition(d);
        CHECK(r.certified);
        CHECK(r.m == 1.0);
        return r.h;
    };
    CHECK(h_of(TruncatedDistribution::normal(2, 0.1, 0.8, 1.2)) == 1.2);
    CHECK(h_of(TruncatedDistribution::gamma(4, 2, 0.5, 1.5)) == 1.5);
    CHECK(h_of(TruncatedDistribution::normal(0, 1, -2, 1)) == 2.0);
    const auto open = check_moment_condition(TruncatedDistribution::normal(0, 1, -INFINITY, INFINITY));
    CHECK_FALSE(open.certified);
    CHECK_FALSE(open.message.empty());
}

TEST_CASE("spectral condition over the random support") {
    const auto a = TruncatedDistribution::normal(2, 0.1, 0.8, 1.2);
    CHECK(check_spectral_condition({a, TruncatedDistribution::gamma(4, 2, 0.5, 1.5)}) == 0.5);
    CHECK(check_spectral_condition({a, TruncatedDistribution::gamma(4, 2, 2, 3)}) == 2.0);
    CHECK_THROWS_AS(check_spectral_condition({a, TruncatedDistribution::gamma(4, 2, 0, 1)}),
                    SpectralConditionViolated);
}

TEST_CASE("counter-based streams") {
    CounterRng a(1, 7), b(1, 7), c(1, 8), d(2, 7);
    for (int i = 0; i < 100; ++i) {
        const auto x = a.next_u64();
        CHECK(x == b.next_u64());
        CHECK(x != c.next_u64());
        CHECK(x != d.next_u64());
    }
    CounterRng u(3, 3);
    for (int i = 0; i < 10000; ++i) {
        const double x = u.next_u01();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
}
