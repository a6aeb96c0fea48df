#include "rcpde/kernel.hpp"

#include <cmath>

#include "rcpde/errors.hpp"

namespace rcpde {

Vector2 kernel_value(const CoupledProblem& p, double omega, double t, const KernelOptions& opts) {
    if (!(omega >= 0.0) || !(t >= 0.0) || opts.s_nodes < 1) {
        throw InvalidParameter("kernel_value: need omega >= 0, t >= 0, s_nodes >= 1");
    }
    const BoundaryData& data = p.data();
    if (t == 0.0) return cosine_transform_f(data, omega, opts.z_cap, opts.f_nodes);
    const Matrix2 L = p.A() - (omega * omega) * p.B();
    const Matrix2 E = mat_exp(t * L);
    const Vector2 F = cosine_transform_f(data, omega, opts.z_cap, opts.f_nodes);
    Vector2 v = E * F;

    if (opts.path == KernelPath::kAuto && data.g_constant && is_invertible(L)) {
        const Vector2 c = p.B() * *data.g_constant;
        v -= mat_inverse(L) * ((E - Matrix2::identity()) * c);
        return v;
    }

    const double hs = t / opts.s_nodes;
    Vector2 integral{};
    for (int k = 0; k < opts.s_nodes; ++k) {
        const double s = (k + 0.5) * hs;
        integral += mat_exp((t - s) * L) * (p.B() * data.g(s));
    }
    v -= hs * integral;
    return v;
}

Vector2 kernel_closed_form_ekman(double a, double nu, double omega, double t) {
    const double w2nu = omega * omega * nu;
    const double decay = std::exp(-w2nu * t);
    const double sn = std::sin(a * t);
    const double cs = std::cos(a * t);
    const double scale = nu / (a * a + w2nu * w2nu);
    return {scale * (w2nu + decay * (a * sn - w2nu * cs)),
            scale * (-a + decay * (a * cs + w2nu * sn))};
}

}  // namespace rcpde
