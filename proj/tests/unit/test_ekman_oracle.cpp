#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rcpde/ekman_oracle.hpp"
#include "rcpde/errors.hpp"
#include "rcpde/quadrature.hpp"

using namespace rcpde;

namespace {

const ScalarFunction kOne = [](double) { return 1.0; };

OracleConfig panels(int n) {
    OracleConfig c;
    c.panels = n;
    return c;
}

}  // namespace

TEST_CASE("trivial limits") {
    const Vector2 far = exact_solution(1, 1, kOne, 100, 1);
    CHECK(std::abs(far.v1) < 1e-300);
    CHECK(std::abs(far.v2) < 1e-300);
    CHECK(exact_solution(1, 1, [](double) { return 0.0; }, 2, 1) == Vector2{});
    CHECK_THROWS_AS(exact_solution(0, 1, kOne, 1, 1), InvalidParameter);
    CHECK_THROWS_AS(exact_solution(1, 1, kOne, -1, 1), InvalidParameter);
    CHECK_THROWS_AS(exact_solution(1, 1, kOne, 1, 0), InvalidParameter);
    CHECK_THROWS_AS(exact_solution(1, 1, kOne, 1, 1, panels(50)), InvalidParameter);
}

TEST_CASE("panel doubling is stable") {
    const Vector2 u = exact_solution(1, 1, kOne, 5, 1, panels(20000));
    const Vector2 v = exact_solution(1, 1, kOne, 5, 1, panels(40000));
    CHECK(std::abs(u.v1 - v.v1) < 1e-10);
    CHECK(std::abs(u.v2 - v.v2) < 1e-10);
}

TEST_CASE("agrees with the midpoint inverse") {
    const auto p = ekman_problem(1, 1);
    const Vector2 exact = exact_solution(1, 1, kOne, 5, 1);

    // At R = 30 the u1 tail of the inverse transform is about 1e-4, so only
    // u2 can agree to 2e-5 there; u1 is held to the computed tail bound.
    const Vector2 r30 = midpoint_inverse(p, QuadratureGrid::from_step(30, 0.005), 5, 1);
    CHECK(std::abs(r30.v2 - exact.v2) < 2e-5);
    const double bound = 2.0 / std::numbers::pi * truncation_bound(p, 30, 1, 0.0, 1.0).total();
    CHECK(std::abs(r30.v1 - exact.v1) < bound);

    const Vector2 r300 = midpoint_inverse(p, QuadratureGrid::from_step(300, 0.005), 5, 1);
    CHECK(std::abs(r300.v1 - exact.v1) < 2e-5);
    CHECK(std::abs(r300.v2 - exact.v2) < 2e-5);
}

TEST_CASE("grid evaluation") {
    const Field one = exact_grid(1, 1, kOne, {5.0}, {1.0});
    CHECK(one.size() == 1);
    CHECK(one.at(0, 0) == exact_solution(1, 1, kOne, 5, 1));

    const std::vector<double> zs = uniform_grid(0, 2, 0.5);
    const std::vector<double> ts = uniform_grid(0, 1, 0.25);
    const Field f = exact_grid(1.3, 0.7, kOne, zs, ts, {}, 3);
    for (std::size_t iz = 0; iz < zs.size(); ++iz) {
        CHECK(f.at(0, iz) == Vector2{});
        for (std::size_t it = 1; it < ts.size(); ++it) {
            CHECK(f.at(it, iz) == exact_solution(1.3, 0.7, kOne, zs[iz], ts[it]));
        }
    }
    CHECK_THROWS_AS(exact_grid(1, 1, kOne, {}, {1.0}), InvalidParameter);
    CHECK_THROWS_AS(exact_grid(1, 1, kOne, {1.0, 0.5}, {1.0}), InvalidParameter);
}

TEST_CASE("boundary flux") {
    const double hz = 1e-4;
    const auto cfg = panels(2000000);
    const Vector2 u0 = exact_solution(1, 1, kOne, 0, 1, cfg);
    const Vector2 u1 = exact_solution(1, 1, kOne, hz, 1, cfg);
    const Vector2 u2 = exact_solution(1, 1, kOne, 2 * hz, 1, cfg);
    // Second-order one-sided difference.
    const Vector2 du = (1.0 / (2 * hz)) * (4.0 * u1 - 3.0 * u0 - u2);
    CHECK(du.v1 == doctest::Approx(-1.0).epsilon(1e-3));
    CHECK(std::abs(du.v2) < 1e-3);
}

TEST_CASE("decay in depth") {
    const std::vector<double> zs = uniform_grid(0, 5, 0.05);
    double prev = INFINITY;
    for (std::size_t i = 10; i < zs.size(); ++i) {
        const double n = norm2(exact_solution(1, 1, kOne, zs[i], 1));
        CHECK(n < prev);
        prev = n;
    }
}

TEST_CASE("PDE residual converges at second order") {
    // u_t = A u + nu u_zz with A = [[0, a], [-a, 0]].
    const double a = 1.0, nu = 1.0, z = 1.0, t = 0.5;
    const auto cfg = panels(400000);
    auto u = [&](double zz, double tt) { return exact_solution(a, nu, kOne, zz, tt, cfg); };
    auto residual = [&](double d) {
        const Vector2 c = u(z, t);
        const Vector2 ut = (1.0 / (2 * d)) * (u(z, t + d) - u(z, t - d));
        const Vector2 uzz = (1.0 / (d * d)) * (u(z + d, t) - 2.0 * c + u(z - d, t));
        const Vector2 r = ut - Vector2{a * c.v2, -a * c.v1} - nu * uzz;
        return norm_inf(r);
    };
    const double r1 = residual(0.1);
    const double r2 = residual(0.05);
    const double r3 = residual(0.025);
    CHECK(std::log2(r1 / r2) >= 1.8);
    CHECK(std::log2(r2 / r3) >= 1.8);
}

TEST_CASE("uniform grids") {
    const auto g = uniform_grid(0, 1, 0.1);
    REQUIRE(g.size() == 11);
    CHECK(g[3] == 0.3);
    CHECK(g.back() == 1.0);
    CHECK(uniform_grid(5, 5, 0.05) == std::vector<double>{5.0});
    CHECK(uniform_grid(0, 1, 0.3).size() == 4);
    CHECK(uniform_grid(0, 5, 0.05).size() == 101);
    CHECK_THROWS_AS(uniform_grid(1, 0, 0.1), InvalidParameter);
    CHECK_THROWS_AS(uniform_grid(0, 1, 0.0), InvalidParameter);
}
