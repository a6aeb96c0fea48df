#pragma once

#include <cmath>

namespace rcpde {

/// Real 2-vector.
struct Vector2 {
    double v1 = 0.0;
    double v2 = 0.0;

    constexpr Vector2& operator+=(const Vector2& o) {
        v1 += o.v1;
        v2 += o.v2;
        return *this;
    }
    constexpr Vector2& operator-=(const Vector2& o) {
        v1 -= o.v1;
        v2 -= o.v2;
        return *this;
    }
    constexpr Vector2& operator*=(double s) {
        v1 *= s;
        v2 *= s;
        return *this;
    }

    friend constexpr Vector2 operator+(Vector2 a, const Vector2& b) { return a += b; }
    friend constexpr Vector2 operator-(Vector2 a, const Vector2& b) { return a -= b; }
    friend constexpr Vector2 operator-(const Vector2& a) { return {-a.v1, -a.v2}; }
    friend constexpr Vector2 operator*(double s, Vector2 a) { return a *= s; }
    friend constexpr Vector2 operator*(Vector2 a, double s) { return a *= s; }
    friend constexpr bool operator==(const Vector2&, const Vector2&) = default;
};

/// Dense real 2x2 matrix, row-major entries.
struct Matrix2 {
    double a11 = 0.0;
    double a12 = 0.0;
    double a21 = 0.0;
    double a22 = 0.0;

    static constexpr Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr Matrix2 zero() { return {}; }
    static constexpr Matrix2 diagonal(double d1, double d2) { return {d1, 0.0, 0.0, d2}; }

    constexpr double trace() const { return a11 + a22; }
    constexpr double det() const { return a11 * a22 - a12 * a21; }
    constexpr Matrix2 transpose() const { return {a11, a21, a12, a22}; }

    constexpr Matrix2& operator+=(const Matrix2& o) {
        a11 += o.a11;
        a12 += o.a12;
        a21 += o.a21;
        a22 += o.a22;
        return *this;
    }
    constexpr Matrix2& operator-=(const Matrix2& o) {
        a11 -= o.a11;
        a12 -= o.a12;
        a21 -= o.a21;
        a22 -= o.a22;
        return *this;
    }
    constexpr Matrix2& operator*=(double s) {
        a11 *= s;
        a12 *= s;
        a21 *= s;
        a22 *= s;
        return *this;
    }

    friend constexpr Matrix2 operator+(Matrix2 a, const Matrix2& b) { return a += b; }
    friend constexpr Matrix2 operator-(Matrix2 a, const Matrix2& b) { return a -= b; }
    friend constexpr Matrix2 operator-(const Matrix2& a) { return {-a.a11, -a.a12, -a.a21, -a.a22}; }
    friend constexpr Matrix2 operator*(double s, Matrix2 a) { return a *= s; }
    friend constexpr Matrix2 operator*(Matrix2 a, double s) { return a *= s; }

    friend constexpr Matrix2 operator*(const Matrix2& p, const Matrix2& q) {
        return {p.a11 * q.a11 + p.a12 * q.a21, p.a11 * q.a12 + p.a12 * q.a22,
                p.a21 * q.a11 + p.a22 * q.a21, p.a21 * q.a12 + p.a22 * q.a22};
    }
    friend constexpr Vector2 operator*(const Matrix2& p, const Vector2& x) {
        return {p.a11 * x.v1 + p.a12 * x.v2, p.a21 * x.v1 + p.a22 * x.v2};
    }
    friend constexpr bool operator==(const Matrix2&, const Matrix2&) = default;
};

/// Eigenvalues of a symmetric 2x2 matrix, lambda_min <= lambda_max.
struct SymmetricSpectrum {
    double lambda_min = 0.0;
    double lambda_max = 0.0;
};

bool is_finite(const Matrix2& p);
bool is_finite(const Vector2& x);

/// (P + P^T) / 2.
Matrix2 symmetric_part(const Matrix2& p);

/// Closed-form spectrum of a symmetric matrix. Throws NonSymmetric when
/// |a12 - a21| > 1e-12.
SymmetricSpectrum symmetric_eigenvalues(const Matrix2& s);

/// Logarithmic norm mu(P): largest eigenvalue of the symmetric part.
double log_norm(const Matrix2& p);

/// Matrix exponential e^P.
///
/// Splits P = alpha*I + Q with alpha = trace/2 so that Q is traceless and
/// Q^2 = delta^2 * I, delta^2 = -det(Q). Then
///     e^P = e^alpha * (cosh(delta) I + sinh(delta)/delta * Q),
/// with the trigonometric branch when delta^2 < 0 and an even series for
/// |delta| < 1e-4.
Matrix2 mat_exp(const Matrix2& p);

/// Complementary error function; returns exactly 0 for x > 27.
double erfc(double x);

/// Inverse. Throws Singular if |det| <= 1e-14 * max(1, ||P||_inf^2).
Matrix2 mat_inverse(const Matrix2& p);

/// True when mat_inverse(p) would succeed.
bool is_invertible(const Matrix2& p);

/// Max absolute row sum.
double norm_inf(const Matrix2& p);

/// Sum of absolute entries (the entrywise matrix norm).
double norm_entry_sum(const Matrix2& p);

/// Largest singular value.
double norm_spectral(const Matrix2& p);

double norm2(const Vector2& x);
double norm_inf(const Vector2& x);

}  // namespace rcpde
