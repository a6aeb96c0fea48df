#include "rcpde/problem.hpp"

#include <cmath>
#include <string>

#include "rcpde/errors.hpp"

namespace rcpde {

BoundaryData BoundaryData::constant_flux(const Vector2& flux) {
    BoundaryData data;
    data.f = [](double) { return Vector2{}; };
    data.g = [flux](double) { return flux; };
    data.cosine_f = [](double) { return Vector2{}; };
    data.g_constant = flux;
    return data;
}

CoupledProblem make_problem(const Matrix2& A, const Matrix2& B, BoundaryData data) {
    if (!is_finite(A) || !is_finite(B)) {
        throw InvalidParameter("make_problem: coefficient matrices must be finite");
    }
    if (!data.f || !data.g) {
        throw InvalidParameter("make_problem: initial condition f and boundary flux g are required");
    }
    const double b = symmetric_eigenvalues(symmetric_part(B)).lambda_min;
    if (!(b > 0.0)) throw SpectralConditionViolated(b);
    return CoupledProblem(A, B, std::move(data), b);
}

CoupledProblem ekman_problem(double a, double nu) {
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw InvalidParameter("ekman_problem: rotation parameter a must be > 0, got " +
                               std::to_string(a));
    }
    if (!(nu > 0.0) || !std::isfinite(nu)) {
        throw InvalidParameter("ekman_problem: viscosity nu must be > 0, got " + std::to_string(nu));
    }
    // u_z(0, t) = [-g(t), 0] with g = 1.
    return make_problem({0.0, a, -a, 0.0}, Matrix2::diagonal(nu, nu),
                        BoundaryData::constant_flux({-1.0, 0.0}));
}

Vector2 cosine_transform_f(const BoundaryData& data, double omega, double z_cap, int nodes) {
    if (data.cosine_f) return data.cosine_f(omega);
    if (!(omega >= 0.0) || !(z_cap > 0.0) || nodes < 1) {
        throw InvalidParameter("cosine_transform_f: need omega >= 0, z_cap > 0, nodes >= 1");
    }
    const double h = z_cap / nodes;
    Vector2 sum{};
    for (int j = 0; j < nodes; ++j) {
        const double z = (j + 0.5) * h;
        sum += std::cos(omega * z) * data.f(z);
    }
    return h * sum;
}

}  // namespace rcpde
