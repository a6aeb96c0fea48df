#pragma once

#include <functional>
#include <optional>

#include "rcpde/linalg.hpp"

namespace rcpde {

using VectorFunction = std::function<Vector2(double)>;

/// Initial and boundary data of the coupled system
///
///     u_t = A u + B u_zz,   z > 0, t > 0
///     u(z, 0) = f(z)
///     u_z(0, t) = g(t)
///     u, u_z -> 0 as z -> infinity
///
/// `cosine_f` is the closed-form cosine transform of f when known.
/// `g_constant` marks g as time-independent and carries its value; the kernel
/// then uses an exact time integral.
struct BoundaryData {
    VectorFunction f;
    VectorFunction g;
    VectorFunction cosine_f;
    std::optional<Vector2> g_constant;

    /// Zero initial condition with constant boundary flux.
    static BoundaryData constant_flux(const Vector2& flux);
};

/// One realization of the coupled system. Immutable once built.
class CoupledProblem {
public:
    const Matrix2& A() const noexcept { return a_; }
    const Matrix2& B() const noexcept { return b_mat_; }
    const BoundaryData& data() const noexcept { return data_; }

    /// lambda_min((B + B^T)/2), strictly positive.
    double b() const noexcept { return b_; }

private:
    friend CoupledProblem make_problem(const Matrix2&, const Matrix2&, BoundaryData);

    CoupledProblem(const Matrix2& a, const Matrix2& b_mat, BoundaryData data, double b)
        : a_(a), b_mat_(b_mat), data_(std::move(data)), b_(b) {}

    Matrix2 a_;
    Matrix2 b_mat_;
    BoundaryData data_;
    double b_;
};

/// Validates the spectral condition and caches b.
/// Throws SpectralConditionViolated when b <= 0, InvalidParameter on
/// non-finite matrices or missing f/g callables.
CoupledProblem make_problem(const Matrix2& A, const Matrix2& B, BoundaryData data);

/// Ekman instance: A = [[0, a], [-a, 0]], B = nu*I, f = 0, g = [-1, 0].
/// Throws InvalidParameter unless a > 0 and nu > 0.
CoupledProblem ekman_problem(double a, double nu);

/// Cosine transform of f at omega. Uses the closed form when the data
/// carries one, otherwise a `nodes`-panel midpoint rule on [0, z_cap].
Vector2 cosine_transform_f(const BoundaryData& data, double omega, double z_cap, int nodes);

}  // namespace rcpde
