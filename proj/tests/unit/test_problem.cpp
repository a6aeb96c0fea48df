#include <doctest.h>

#include <cmath>
#include <complex>

#include "rcpde/errors.hpp"
#include "rcpde/problem.hpp"

using namespace rcpde;

namespace {

BoundaryData exp_initial_data() {
    BoundaryData d;
    d.f = [](double z) { return Vector2{std::exp(-z), 0.0}; };
    d.g = [](double) { return Vector2{}; };
    return d;
}

// Closed-form value of the midpoint sum h * sum_j e^{c z_j}, z_j = (j + 1/2) h.
std::complex<double> midpoint_sum_exp(std::complex<double> c, double z_cap, int nodes) {
    const double h = z_cap / nodes;
    const auto q = std::exp(c * h);
    return h * std::exp(c * (h / 2)) * (1.0 - std::pow(q, nodes)) / (1.0 - q);
}

}  // namespace

TEST_CASE("spectral condition") {
    const auto data = BoundaryData::constant_flux({-1, 0});
    CHECK(make_problem(Matrix2::zero(), Matrix2::identity(), data).b() == 1.0);
    CHECK(make_problem(Matrix2::zero(), {2, 1, 0, 2}, data).b() == doctest::Approx(1.5));

    try {
        make_problem(Matrix2::zero(), {0, 1, -1, 0}, data);
        FAIL("expected SpectralConditionViolated");
    } catch (const SpectralConditionViolated& e) {
        CHECK(e.value() == 0.0);
    }
    CHECK_THROWS_AS(make_problem(Matrix2::zero(), Matrix2::diagonal(1, -0.1), data),
                    SpectralConditionViolated);
    CHECK_THROWS_AS(make_problem({NAN, 0, 0, 0}, Matrix2::identity(), data), InvalidParameter);
    BoundaryData missing;
    CHECK_THROWS_AS(make_problem(Matrix2::zero(), Matrix2::identity(), missing), InvalidParameter);
}

TEST_CASE("Ekman preset") {
    const auto p = ekman_problem(1, 1);
    CHECK(p.b() == 1.0);
    CHECK(p.A() == Matrix2{0, 1, -1, 0});
    CHECK(p.B() == Matrix2::identity());
    CHECK(log_norm(p.A()) == 0.0);
    CHECK(p.data().g(0.3) == Vector2{-1, 0});
    CHECK(p.data().f(2.0) == Vector2{});
    CHECK(ekman_problem(2, 0.5).b() == 0.5);
    CHECK_THROWS_AS(ekman_problem(0, 1), InvalidParameter);
    CHECK_THROWS_AS(ekman_problem(1, 0), InvalidParameter);
    CHECK_THROWS_AS(ekman_problem(1, -2), InvalidParameter);
}

TEST_CASE("cosine transform of the initial data") {
    const auto zero = BoundaryData::constant_flux({-1, 0});
    for (double w : {0.0, 0.5, 3.0}) CHECK(cosine_transform_f(zero, w, 40, 4000) == Vector2{});

    const auto data = exp_initial_data();

    SUBCASE("the rule is the plain midpoint sum") {
        // e^{-z} and e^{-z} cos z as real parts of e^{c z}.
        const auto s0 = midpoint_sum_exp({-1.0, 0.0}, 40, 4000);
        const auto s1 = midpoint_sum_exp({-1.0, 1.0}, 40, 4000);
        CHECK(cosine_transform_f(data, 0.0, 40, 4000).v1 == doctest::Approx(s0.real()).epsilon(1e-13));
        CHECK(cosine_transform_f(data, 1.0, 40, 4000).v1 == doctest::Approx(s1.real()).epsilon(1e-13));
    }

    SUBCASE("converges to the exact transform 1/(1 + w^2)") {
        // Midpoint error is about h^2/24 for this integrand; 10000 nodes on
        // [0, 40] bring it under 1e-6.
        CHECK(std::abs(cosine_transform_f(data, 0.0, 40, 10000).v1 - 1.0) < 1e-6);
        CHECK(std::abs(cosine_transform_f(data, 1.0, 40, 10000).v1 - 0.5) < 1e-6);
        CHECK(std::abs(cosine_transform_f(data, 0.0, 40, 4000).v1 - 1.0) < 5e-6);
    }

    CHECK_THROWS_AS(cosine_transform_f(data, -1.0, 40, 10), InvalidParameter);
    CHECK_THROWS_AS(cosine_transform_f(data, 1.0, 0.0, 10), InvalidParameter);
    CHECK_THROWS_AS(cosine_transform_f(data, 1.0, 40, 0), InvalidParameter);
}
