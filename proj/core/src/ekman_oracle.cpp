#include "rcpde/ekman_oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rcpde/errors.hpp"
#include "rcpde/parallel.hpp"

namespace rcpde {

void OracleConfig::validate() const {
    if (panels < 100) {
        throw InvalidParameter("OracleConfig: panels must be >= 100, got " + std::to_string(panels));
    }
    if (!(tol > 0.0)) throw InvalidParameter("OracleConfig: tol must be > 0");
}

Vector2 exact_solution(double a, double nu, const ScalarFunction& g, double z, double t,
                       const OracleConfig& cfg) {
    if (!(a > 0.0) || !(nu > 0.0) || !(z >= 0.0) || !(t > 0.0)) {
        throw InvalidParameter("exact_solution: need a > 0, nu > 0, z >= 0, t > 0");
    }
    cfg.validate();
    const double root_t = std::sqrt(t);
    const double dv = root_t / cfg.panels;
    const double gauss_scale = z * z / (4.0 * nu);
    double s1 = 0.0;
    double s2 = 0.0;
    for (int k = 0; k < cfg.panels; ++k) {
        const double v = (k + 0.5) * dv;
        const double v2 = v * v;
        const double damp = std::exp(-gauss_scale / v2);
        if (damp == 0.0) continue;
        const double w = g(t - v2) * damp;
        s1 += w * std::cos(a * v2);
        s2 += w * std::sin(a * v2);
    }
    const double scale = 2.0 * std::sqrt(nu / std::numbers::pi) * dv;
    return {scale * s1, -scale * s2};
}

Field exact_grid(double a, double nu, const ScalarFunction& g, const std::vector<double>& z_grid,
                 const std::vector<double>& t_grid, const OracleConfig& cfg, int threads) {
    if (z_grid.empty() || t_grid.empty()) {
        throw InvalidParameter("exact_grid: grids must be nonempty");
    }
    for (std::size_t i = 1; i < z_grid.size(); ++i) {
        if (!(z_grid[i] > z_grid[i - 1])) throw InvalidParameter("exact_grid: z grid not increasing");
    }
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > t_grid[i - 1])) throw InvalidParameter("exact_grid: t grid not increasing");
    }
    if (t_grid.front() < 0.0) throw InvalidParameter("exact_grid: t must be >= 0");

    Field field(z_grid, t_grid);
    const std::size_t nz = z_grid.size();
    detail::parallel_for(field.size(), threads, [&](std::size_t idx) {
        const std::size_t it = idx / nz;
        const std::size_t iz = idx % nz;
        if (t_grid[it] == 0.0) {
            field.at(it, iz) = Vector2{};
        } else {
            field.at(it, iz) = exact_solution(a, nu, g, z_grid[iz], t_grid[it], cfg);
        }
    });
    return field;
}

}  // namespace rcpde
