#pragma once

#include <string>

namespace rcpde {

enum class DistributionKind { kNormal, kGamma, kPointMass };

/// How the second Gamma parameter is read.
enum class GammaParam { kRate, kScale };

/// A Normal or Gamma law restricted to [lo, hi] and renormalized, or a point
/// mass. `normalizer()` is the untruncated probability of [lo, hi].
class TruncatedDistribution {
public:
    /// Throws InvalidParameter for sigma <= 0, lo >= hi, or a window with
    /// no untruncated mass.
    static TruncatedDistribution normal(double mu, double sigma, double lo, double hi);

    /// Gamma(shape, rate) by default; `param` selects the scale reading.
    static TruncatedDistribution gamma(double shape, double rate_or_scale, double lo, double hi,
                                       GammaParam param = GammaParam::kRate);

    static TruncatedDistribution point_mass(double x);

    DistributionKind kind() const noexcept { return kind_; }
    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    double normalizer() const noexcept { return normalizer_; }

    /// Normal: (mu, sigma). Gamma: (shape, scale). Point mass: (x, 0).
    double first_param() const noexcept { return p1_; }
    double second_param() const noexcept { return p2_; }

    /// Truncated density; zero outside [lo, hi]. Not defined for point masses.
    double pdf(double x) const;

    /// Untruncated CDF and density.
    double base_cdf(double x) const;
    double base_pdf(double x) const;

    std::string describe() const;

private:
    TruncatedDistribution(DistributionKind kind, double p1, double p2, double lo, double hi);

    DistributionKind kind_;
    double p1_;
    double p2_;
    double lo_;
    double hi_;
    double normalizer_ = 1.0;
    // The window lies in the upper tail; sample through survival functions.
    bool upper_tail_ = false;
    double tail_lo_ = 0.0;  // CDF(lo), or S(lo) when upper_tail_
    double tail_hi_ = 0.0;  // CDF(hi), or S(hi) when upper_tail_

    friend double sample(const TruncatedDistribution& dist, double u01);
};

/// Inverse-CDF draw from the truncated law:
///   x = Q(CDF(lo) + u01 * normalizer), clamped to [lo, hi].
/// Windows in the upper tail go through the survival function instead so
/// that tiny tail masses keep full relative precision.
double sample(const TruncatedDistribution& dist, double u01);

/// Certificate E[|x|^r] <= m h^r for all r >= 0.
struct MomentConditionReport {
    bool certified = false;
    double m = 1.0;
    double h = 0.0;
    std::string message;
};

/// Bounded supports are always certified with m = 1, h = max(|lo|, |hi|).
/// An unbounded support is reported uncertified with a warning message.
MomentConditionReport check_moment_condition(const TruncatedDistribution& dist);

}  // namespace rcpde
