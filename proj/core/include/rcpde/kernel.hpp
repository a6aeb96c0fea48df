#pragma once

#include "rcpde/linalg.hpp"
#include "rcpde/problem.hpp"

namespace rcpde {

enum class KernelPath {
    kAuto,        // closed-form time integral when g is constant and L invertible
    kQuadrature,  // always integrate in s with the midpoint rule
};

struct KernelOptions {
    int s_nodes = 2000;
    // Only used when the problem has no closed-form cosine transform of f.
    double z_cap = 60.0;
    int f_nodes = 20000;
    KernelPath path = KernelPath::kAuto;
};

/// Cosine-transformed solution V(t)(omega), the solution of
///     V' = L V - B g(t),  V(0) = F(omega),  L = A - omega^2 B.
///
/// For constant g and invertible L the time integral is taken in closed form
/// as L^{-1}(e^{Lt} - I) B g, which only involves decaying exponentials.
/// Otherwise a composite midpoint rule with `opts.s_nodes` panels is used.
/// At t = 0 the result is F(omega).
Vector2 kernel_value(const CoupledProblem& p, double omega, double t, const KernelOptions& opts = {});

inline Vector2 kernel_value(const CoupledProblem& p, double omega, double t, int s_nodes) {
    KernelOptions opts;
    opts.s_nodes = s_nodes;
    return kernel_value(p, omega, t, opts);
}

/// Closed-form V(t)(omega) for the Ekman preset (g = 1):
///   nu / (a^2 + nu^2 w^4) * [ w^2 nu + e^{-w^2 nu t}(a sin at - w^2 nu cos at),
///                             -a    + e^{-w^2 nu t}(a cos at + w^2 nu sin at) ]
Vector2 kernel_closed_form_ekman(double a, double nu, double omega, double t);

}  // namespace rcpde
