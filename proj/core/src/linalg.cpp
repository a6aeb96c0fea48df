#include "rcpde/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "rcpde/errors.hpp"

namespace rcpde {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kSeriesThreshold = 1e-4;
constexpr double kErfcUnderflow = 27.0;
constexpr double kSingularRelTol = 1e-14;

// cosh(d) and sinh(d)/d as functions of d2 = d^2 (either sign).
struct EvenPair {
    double c;
    double s;
};

EvenPair cosh_sinhc(double d2) {
    if (std::abs(d2) < kSeriesThreshold * kSeriesThreshold) {
        const double c = 1.0 + d2 / 2.0 * (1.0 + d2 / 12.0 * (1.0 + d2 / 30.0));
        const double s = 1.0 + d2 / 6.0 * (1.0 + d2 / 20.0 * (1.0 + d2 / 42.0));
        return {c, s};
    }
    if (d2 > 0.0) {
        const double d = std::sqrt(d2);
        return {std::cosh(d), std::sinh(d) / d};
    }
    const double d = std::sqrt(-d2);
    return {std::cos(d), std::sin(d) / d};
}

}  // namespace

bool is_finite(const Matrix2& p) {
    return std::isfinite(p.a11) && std::isfinite(p.a12) && std::isfinite(p.a21) &&
           std::isfinite(p.a22);
}

bool is_finite(const Vector2& x) { return std::isfinite(x.v1) && std::isfinite(x.v2); }

Matrix2 symmetric_part(const Matrix2& p) {
    const double off = 0.5 * (p.a12 + p.a21);
    return {p.a11, off, off, p.a22};
}

SymmetricSpectrum symmetric_eigenvalues(const Matrix2& s) {
    if (std::abs(s.a12 - s.a21) > kSymmetryTol) {
        throw NonSymmetric("symmetric_eigenvalues: matrix is not symmetric");
    }
    const double mean = 0.5 * (s.a11 + s.a22);
    const double half_gap = 0.5 * (s.a11 - s.a22);
    const double radius = std::hypot(half_gap, s.a12);
    return {mean - radius, mean + radius};
}

double log_norm(const Matrix2& p) { return symmetric_eigenvalues(symmetric_part(p)).lambda_max; }

Matrix2 mat_exp(const Matrix2& p) {
    const double alpha = 0.5 * p.trace();
    const Matrix2 q{p.a11 - alpha, p.a12, p.a21, p.a22 - alpha};
    // q22 = -q11, so det(Q) = -(q11^2 + q12 q21).
    const double d2 = q.a11 * q.a11 + q.a12 * q.a21;
    const auto [c, s] = cosh_sinhc(d2);
    const double scale = std::exp(alpha);
    return {scale * (c + s * q.a11), scale * s * q.a12, scale * s * q.a21,
            scale * (c + s * q.a22)};
}

double erfc(double x) {
    if (x > kErfcUnderflow) return 0.0;
    return std::erfc(x);
}

bool is_invertible(const Matrix2& p) {
    const double n = norm_inf(p);
    return std::abs(p.det()) > kSingularRelTol * std::max(1.0, n * n);
}

Matrix2 mat_inverse(const Matrix2& p) {
    if (!is_invertible(p)) {
        throw Singular("mat_inverse: determinant below singularity threshold");
    }
    const double inv_det = 1.0 / p.det();
    return {p.a22 * inv_det, -p.a12 * inv_det, -p.a21 * inv_det, p.a11 * inv_det};
}

double norm_inf(const Matrix2& p) {
    return std::max(std::abs(p.a11) + std::abs(p.a12), std::abs(p.a21) + std::abs(p.a22));
}

double norm_entry_sum(const Matrix2& p) {
    return std::abs(p.a11) + std::abs(p.a12) + std::abs(p.a21) + std::abs(p.a22);
}

double norm_spectral(const Matrix2& p) {
    // sigma_max^2 = lambda_max(P^T P)
    const Matrix2 g = p.transpose() * p;
    const double lmax = symmetric_eigenvalues(symmetric_part(g)).lambda_max;
    return std::sqrt(std::max(0.0, lmax));
}

double norm2(const Vector2& x) { return std::hypot(x.v1, x.v2); }

double norm_inf(const Vector2& x) { return std::max(std::abs(x.v1), std::abs(x.v2)); }

}  // namespace rcpde
