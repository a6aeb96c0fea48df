#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rcpde/ekman_oracle.hpp"
#include "rcpde/errors.hpp"
#include "rcpde/quadrature.hpp"

using namespace rcpde;

namespace {

const ScalarFunction kOne = [](double) { return 1.0; };

// Exact u(5, 1) for a = nu = 1, from an independent scipy evaluation.
constexpr double kExactU1 = 8.968838025244983e-05;
constexpr double kExactU2 = -0.00011130181179967509;

}  // namespace

TEST_CASE("grid construction") {
    const auto g = QuadratureGrid::from_step(20, 0.05);
    CHECK(g.intervals() == 400);
    CHECK(g.node_count() == 400);
    CHECK(g.step() == doctest::Approx(0.05));
    CHECK(g.node(0) == doctest::Approx(0.025));
    CHECK(g.node(399) == doctest::Approx(19.975));

    const auto s = QuadratureGrid::from_step(20, 0.05, NodeLayout::kShiftedLinspace);
    CHECK(s.node_count() == 399);
    CHECK(s.step() == doctest::Approx(20.0 / 398.0));
    CHECK(s.node(0) == doctest::Approx(10.0 / 398.0));

    CHECK(QuadratureGrid::from_step(0.3, 0.1).intervals() == 3);
    CHECK_THROWS_AS(QuadratureGrid::from_step(20, 0.03), InvalidParameter);
    CHECK_THROWS_AS(QuadratureGrid(0.0, 10), InvalidParameter);
    CHECK_THROWS_AS(QuadratureGrid(1.0, 0), InvalidParameter);
    CHECK_THROWS_AS(QuadratureGrid(1.0, 2, NodeLayout::kShiftedLinspace), InvalidParameter);
}

TEST_CASE("midpoint inverse on the Ekman benchmark") {
    const auto p = ekman_problem(1, 1);
    const Vector2 exact = exact_solution(1, 1, kOne, 5, 1);
    CHECK(exact.v1 == doctest::Approx(kExactU1).epsilon(1e-8));
    CHECK(exact.v2 == doctest::Approx(kExactU2).epsilon(1e-8));

    SUBCASE("tabulated layout reproduces the published error") {
        const auto g = QuadratureGrid::from_step(20, 0.05, NodeLayout::kShiftedLinspace);
        const Vector2 u = midpoint_inverse(p, g, 5, 1);
        CHECK(std::abs(u.v1 - exact.v1) == doctest::Approx(9.3665e-5).epsilon(0.01));
        CHECK(std::abs(u.v2 - exact.v2) == doctest::Approx(2.4768e-7).epsilon(0.01));
    }

    SUBCASE("standard layout matches an independent evaluation") {
        // numpy: (2h/pi) sum_j I2(1, w_j) cos(5 w_j), w_j = (j + 1/2) h, N = 400.
        const auto g = QuadratureGrid::from_step(20, 0.05);
        const Vector2 u = midpoint_inverse(p, g, 5, 1);
        CHECK(std::abs(u.v1 - exact.v1) == doctest::Approx(1.6697282e-4).epsilon(1e-5));
        CHECK(std::abs(u.v2 - exact.v2) == doctest::Approx(4.3049e-7).epsilon(1e-3));
    }

    SUBCASE("u2 error decreases with R at fixed h") {
        double prev = INFINITY;
        for (double R : {5, 10, 15, 20, 25, 30}) {
            const auto g = QuadratureGrid::from_step(R, 0.05, NodeLayout::kShiftedLinspace);
            const double err = std::abs(midpoint_inverse(p, g, 5, 1).v2 - exact.v2);
            CHECK(err < prev);
            prev = err;
        }
    }

    SUBCASE("single-node sum") {
        const double h = 0.7, z = 1.9, t = 0.6;
        const auto g = QuadratureGrid(h, 1);
        const Vector2 v = kernel_value(p, h / 2, t);
        const Vector2 expect = (2 * h / std::numbers::pi * std::cos(h * z / 2)) * v;
        const Vector2 got = midpoint_inverse(p, g, z, t);
        CHECK(got.v1 == doctest::Approx(expect.v1).epsilon(1e-15));
        CHECK(got.v2 == doctest::Approx(expect.v2).epsilon(1e-15));
    }
}

TEST_CASE("zero data gives zero") {
    const auto zero = make_problem({0, 1, -1, 0}, Matrix2::identity(), BoundaryData::constant_flux({0, 0}));
    CHECK(midpoint_inverse(zero, QuadratureGrid::from_step(20, 0.05), 2.0, 1.0) == Vector2{});
    CHECK(gauss_laguerre_inverse(zero, GaussLaguerreRule::make(8), 2.0, 1.0) == Vector2{});
}

TEST_CASE("a shared sweep inverts bit-identically to per-z recomputation") {
    const auto p = ekman_problem(1.2, 0.8);
    const auto g = QuadratureGrid::from_step(10, 0.05);
    const KernelSweep sweep = sweep_kernel(p, g, 0.7);
    const KernelSweep threaded = sweep_kernel(p, g, 0.7, {}, 4);
    CHECK(sweep.values == threaded.values);
    for (double z : {0.0, 1.5, 4.0}) CHECK(invert_sweep(sweep, z) == midpoint_inverse(p, g, z, 0.7));
}

TEST_CASE("Gauss-Laguerre rule") {
    for (int M : {1, 2, 5, 15, 32, 64}) {
        const auto r = GaussLaguerreRule::make(M);
        REQUIRE(r.abscissae.size() == static_cast<std::size_t>(M));
        // Exact for x^k, k <= 2M - 1: int_0^inf x^k e^{-x} dx = k!.
        for (int k = 0; k <= std::min(2 * M - 1, 20); ++k) {
            double sum = 0.0;
            for (int i = 0; i < M; ++i) sum += r.weights[i] * std::pow(r.abscissae[i], k);
            CHECK(sum == doctest::Approx(std::tgamma(k + 1.0)).epsilon(1e-10));
        }
    }
    CHECK_THROWS_AS(GaussLaguerreRule::make(0), InvalidParameter);
    CHECK_THROWS_AS(GaussLaguerreRule::make(65), InvalidParameter);
}

TEST_CASE("Gauss-Laguerre fails on the oscillatory inverse") {
    const auto p = ekman_problem(1, 1);
    const Vector2 exact = exact_solution(1, 1, kOne, 5, 1);
    auto err = [&](int M) { return std::abs(gauss_laguerre_inverse(p, GaussLaguerreRule::make(M), 5, 1).v1 - exact.v1); };
    CHECK(err(3) == doctest::Approx(2.2645e-2).epsilon(0.05));
    CHECK(err(8) == doctest::Approx(1.9483e-3).epsilon(0.05));
    double best = INFINITY;
    for (int M = 1; M <= 15; ++M) best = std::min(best, err(M));
    const auto g = QuadratureGrid::from_step(20, 0.05, NodeLayout::kShiftedLinspace);
    const double mid = std::abs(midpoint_inverse(p, g, 5, 1).v1 - exact.v1);
    CHECK(best >= 1e-3);
    CHECK(mid <= 1e-4);
    CHECK(best >= 10 * mid);
}

TEST_CASE("Gauss-Legendre rule") {
    const auto r = GaussLegendreRule::make(10, 0.5, 1.5);
    for (int k = 0; k <= 19; ++k) {
        double sum = 0.0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i) sum += r.weights[i] * std::pow(r.nodes[i], k);
        const double exact = (std::pow(1.5, k + 1) - std::pow(0.5, k + 1)) / (k + 1);
        CHECK(sum == doctest::Approx(exact).epsilon(1e-13));
    }
    for (std::size_t i = 1; i < r.nodes.size(); ++i) CHECK(r.nodes[i] > r.nodes[i - 1]);
}

TEST_CASE("truncation bound") {
    const auto p = ekman_problem(1, 1);
    CHECK(truncation_bound(p, 20, 1, 0.0, 1.0).bound_J1 == 0.0);

    const double full = std::sqrt(std::numbers::pi) / 2.0;  // F_sup = 1, b = t = 1, mu(A) = 0
    CHECK(truncation_bound(p, 0.0, 1, 1.0, 0.0).bound_J1 == doctest::Approx(full).epsilon(1e-15));
    CHECK(truncation_bound(p, 1e-12, 1, 1.0, 0.0).bound_J1 == doctest::Approx(full).epsilon(1e-10));

    SUBCASE("stays accurate for large R") {
        // int_0^inf erfc(R v) dv = 1/(R sqrt(pi)), so bound_J2 -> sqrt(pi) * 2 / (R sqrt(pi)).
        for (double R : {100.0, 1e4, 1e6}) {
            CHECK(truncation_bound(p, R, 1, 0.0, 1.0).bound_J2 == doctest::Approx(2.0 / R).epsilon(1e-4));
        }
    }

    SUBCASE("bounds the measured tail") {
        const double h = 0.005;
        const Vector2 far = midpoint_inverse(p, QuadratureGrid::from_step(200, h), 5, 1);
        for (double R : {5.0, 10.0, 20.0}) {
            const Vector2 near = midpoint_inverse(p, QuadratureGrid::from_step(R, h), 5, 1);
            const double tail = norm_inf(far - near);
            const double bound = 2.0 / std::numbers::pi * truncation_bound(p, R, 1, 0.0, 1.0).total();
            CHECK(tail <= bound);
        }
    }
}

TEST_CASE("radius selection") {
    const auto p = ekman_problem(1, 1);
    const double full = 2.0 / std::numbers::pi * truncation_bound(p, 0.0, 1, 0.0, 1.0).total();
    CHECK(select_radius(p, 1, 0.0, 1.0, full) == 1.0);

    // With mu(A) = 0 and ||B|| = 2 the bound is about 4/(pi R), so 1e-5 needs
    // R near 1.3e5 and 1e-6 would need more than the 1e6 cap.
    const double r5 = select_radius(p, 1, 0.0, 1.0, 1e-5);
    CHECK(2.0 / std::numbers::pi * truncation_bound(p, r5, 1, 0.0, 1.0).total() <= 1e-5);
    CHECK(2.0 / std::numbers::pi * truncation_bound(p, 0.999 * r5, 1, 0.0, 1.0).total() > 1e-5);
    CHECK_THROWS_AS(select_radius(p, 1, 0.0, 1.0, 1e-6), RadiusOverflow);
    double prev = 0.0;
    for (double tol : {1e-2, 1e-3, 1e-4, 1e-5}) {
        const double r = select_radius(p, 1, 0.0, 1.0, tol);
        CHECK(r >= prev);
        prev = r;
    }
    CHECK_THROWS_AS(select_radius(p, 1, 0.0, 1.0, 1e-9), RadiusOverflow);
    CHECK_THROWS_AS(select_radius(p, 1, 0.0, 1.0, 0.0), InvalidParameter);
}
