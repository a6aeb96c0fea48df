#pragma once

#include <cstddef>
#include <vector>

#include "rcpde/linalg.hpp"

namespace rcpde {

/// Values of the 2-component solution over a tensor (t, z) grid, stored
/// row-major with one row per time level.
class Field {
public:
    Field() = default;
    Field(std::vector<double> z_grid, std::vector<double> t_grid)
        : z_(std::move(z_grid)), t_(std::move(t_grid)), values_(z_.size() * t_.size()) {}

    const std::vector<double>& z_grid() const noexcept { return z_; }
    const std::vector<double>& t_grid() const noexcept { return t_; }
    std::size_t nz() const noexcept { return z_.size(); }
    std::size_t nt() const noexcept { return t_.size(); }
    std::size_t size() const noexcept { return values_.size(); }

    Vector2& at(std::size_t it, std::size_t iz) { return values_[it * z_.size() + iz]; }
    const Vector2& at(std::size_t it, std::size_t iz) const { return values_[it * z_.size() + iz]; }

    const std::vector<Vector2>& values() const noexcept { return values_; }
    std::vector<Vector2>& values() noexcept { return values_; }

private:
    std::vector<double> z_;
    std::vector<double> t_;
    std::vector<Vector2> values_;
};

/// start, start + step, ... up to stop, each point computed as start + i*step.
/// `stop` is included when it lies on the lattice to within 1e-9 steps.
std::vector<double> uniform_grid(double start, double stop, double step);

}  // namespace rcpde
