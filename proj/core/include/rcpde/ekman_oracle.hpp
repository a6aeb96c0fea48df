#pragma once

#include <functional>
#include <vector>

#include "rcpde/field.hpp"
#include "rcpde/linalg.hpp"

namespace rcpde {

struct OracleConfig {
    int panels = 20000;
    double tol = 1e-9;

    /// Throws InvalidParameter unless panels >= 100 and tol > 0.
    void validate() const;
};

using ScalarFunction = std::function<double(double)>;

/// Exact Ekman solution for boundary flux u_z(0, t) = [-g(t), 0]:
///
///   u1 =  sqrt(nu/pi) int_0^t g(s) / sqrt(t-s) exp(-z^2 / (4 nu (t-s))) cos(a (t-s)) ds
///   u2 = -sqrt(nu/pi) int_0^t g(s) / sqrt(t-s) exp(-z^2 / (4 nu (t-s))) sin(a (t-s)) ds
///
/// Evaluated after the substitution s = t - v^2, which removes the endpoint
/// singularity, with a composite midpoint rule in v on [0, sqrt(t)].
Vector2 exact_solution(double a, double nu, const ScalarFunction& g, double z, double t,
                       const OracleConfig& cfg = {});

/// exact_solution over a tensor grid. Rows with t == 0 hold the initial
/// condition (zero). Grid points are evaluated independently, so `threads`
/// does not change the result.
Field exact_grid(double a, double nu, const ScalarFunction& g, const std::vector<double>& z_grid,
                 const std::vector<double>& t_grid, const OracleConfig& cfg = {}, int threads = 1);

}  // namespace rcpde
