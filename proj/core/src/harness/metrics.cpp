#include "rcpde/harness/metrics.hpp"

#include <cmath>
#include <string>

#include "rcpde/errors.hpp"

namespace rcpde::harness {

ComponentError rmse(const std::vector<Vector2>& approx, const std::vector<Vector2>& reference) {
    if (approx.size() != reference.size()) {
        throw GridMismatch("rmse: sizes differ (" + std::to_string(approx.size()) + " vs " +
                           std::to_string(reference.size()) + ")");
    }
    if (approx.empty()) throw GridMismatch("rmse: empty fields");
    double s1 = 0.0;
    double s2 = 0.0;
    for (std::size_t i = 0; i < approx.size(); ++i) {
        const double d1 = approx[i].v1 - reference[i].v1;
        const double d2 = approx[i].v2 - reference[i].v2;
        s1 += d1 * d1;
        s2 += d2 * d2;
    }
    const double n = static_cast<double>(approx.size());
    return {std::sqrt(s1 / n), std::sqrt(s2 / n)};
}

ComponentError rmse(const Field& approx, const Field& reference) {
    if (approx.z_grid() != reference.z_grid() || approx.t_grid() != reference.t_grid()) {
        throw GridMismatch("rmse: fields live on different (z, t) grids");
    }
    return rmse(approx.values(), reference.values());
}

ComponentError abs_error(const Vector2& approx, const Vector2& reference) {
    return {std::abs(approx.v1 - reference.v1), std::abs(approx.v2 - reference.v2)};
}

}  // namespace rcpde::harness
