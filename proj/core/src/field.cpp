#include "rcpde/field.hpp"

#include <cmath>

#include "rcpde/errors.hpp"

namespace rcpde {

std::vector<double> uniform_grid(double start, double stop, double step) {
    if (!(step > 0.0) || !(stop >= start)) {
        throw InvalidParameter("uniform_grid: need step > 0 and stop >= start");
    }
    const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> out(n);
    // Steps like 0.1 are better expressed as division by 10: i / 10.0 is the
    // double nearest to i/10, while i * 0.1 can be off by an ulp.
    const double per_unit = std::round(1.0 / step);
    const bool reciprocal = per_unit >= 1.0 && std::abs(per_unit * step - 1.0) < 1e-12;
    for (std::size_t i = 0; i < n; ++i) {
        const auto k = static_cast<double>(i);
        out[i] = start + (reciprocal ? k / per_unit : k * step);
    }
    return out;
}

}  // namespace rcpde
