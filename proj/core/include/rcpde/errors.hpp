#pragma once

#include <stdexcept>
#include <string>

namespace rcpde {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied parameter is outside its admissible domain.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

class NonSymmetric : public Error {
public:
    using Error::Error;
};

class Singular : public Error {
public:
    using Error::Error;
};

/// lambda_min of the symmetric part of the diffusion matrix is not positive.
/// Carries the offending value.
class SpectralConditionViolated : public Error {
public:
    explicit SpectralConditionViolated(double b)
        : Error("spectral condition violated: lambda_min((B + B^T)/2) = " + std::to_string(b) +
                " is not > 0"),
          b_(b) {}

    double value() const noexcept { return b_; }

private:
    double b_;
};

class RadiusOverflow : public Error {
public:
    using Error::Error;
};

class GridMismatch : public Error {
public:
    using Error::Error;
};

/// Configuration problem; `field()` names the offending key (dotted path).
class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& message)
        : Error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

}  // namespace rcpde
