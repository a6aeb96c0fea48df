#pragma once

#include <vector>

#include "rcpde/field.hpp"
#include "rcpde/linalg.hpp"

namespace rcpde::harness {

/// Per-component error pair.
struct ComponentError {
    double u1 = 0.0;
    double u2 = 0.0;
};

/// Componentwise sqrt(mean((approx - reference)^2)). Throws GridMismatch
/// when sizes differ or are zero.
ComponentError rmse(const std::vector<Vector2>& approx, const std::vector<Vector2>& reference);

/// Field overload; the z and t grids must match exactly.
ComponentError rmse(const Field& approx, const Field& reference);

ComponentError abs_error(const Vector2& approx, const Vector2& reference);

}  // namespace rcpde::harness
