#include "rcpde/distributions.hpp"

#include <algorithm>
#include <boost/math/distributions/gamma.hpp>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <limits>
#include <sstream>

#include "rcpde/errors.hpp"

namespace rcpde {

namespace {

namespace bm = boost::math;

template <typename Fn>
auto visit_base(DistributionKind kind, double p1, double p2, Fn&& fn) {
    if (kind == DistributionKind::kGamma) return fn(bm::gamma_distribution<double>(p1, p2));
    return fn(bm::normal_distribution<double>(p1, p2));
}

// CDF/survival that accept infinite arguments and points below the Gamma
// support.
template <typename Dist>
double cdf_at(const Dist& d, double x) {
    if (x == -std::numeric_limits<double>::infinity()) return 0.0;
    if (x == std::numeric_limits<double>::infinity()) return 1.0;
    if constexpr (std::is_same_v<Dist, bm::gamma_distribution<double>>) {
        if (x <= 0.0) return 0.0;
    }
    return bm::cdf(d, x);
}

template <typename Dist>
double survival_at(const Dist& d, double x) {
    if (x == -std::numeric_limits<double>::infinity()) return 1.0;
    if (x == std::numeric_limits<double>::infinity()) return 0.0;
    if constexpr (std::is_same_v<Dist, bm::gamma_distribution<double>>) {
        if (x <= 0.0) return 1.0;
    }
    return bm::cdf(bm::complement(d, x));
}

}  // namespace

TruncatedDistribution::TruncatedDistribution(DistributionKind kind, double p1, double p2, double lo,
                                             double hi)
    : kind_(kind), p1_(p1), p2_(p2), lo_(lo), hi_(hi) {
    if (kind == DistributionKind::kPointMass) return;
    if (std::isnan(lo) || std::isnan(hi) || !(lo < hi)) {
        throw InvalidParameter("truncated distribution: support needs lo < hi");
    }
    visit_base(kind, p1, p2, [&](const auto& d) {
        const double c_lo = cdf_at(d, lo);
        upper_tail_ = c_lo > 0.5;
        if (upper_tail_) {
            tail_lo_ = survival_at(d, lo);
            tail_hi_ = survival_at(d, hi);
            normalizer_ = tail_lo_ - tail_hi_;
        } else {
            tail_lo_ = c_lo;
            tail_hi_ = cdf_at(d, hi);
            normalizer_ = tail_hi_ - tail_lo_;
        }
        return 0;
    });
    if (!(normalizer_ > 0.0)) {
        throw InvalidParameter("truncated distribution: support [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "] carries no probability mass");
    }
}

TruncatedDistribution TruncatedDistribution::normal(double mu, double sigma, double lo, double hi) {
    if (!std::isfinite(mu) || !(sigma > 0.0) || !std::isfinite(sigma)) {
        throw InvalidParameter("truncated normal: need finite mu and sigma > 0");
    }
    return TruncatedDistribution(DistributionKind::kNormal, mu, sigma, lo, hi);
}

TruncatedDistribution TruncatedDistribution::gamma(double shape, double rate_or_scale, double lo,
                                                   double hi, GammaParam param) {
    if (!(shape > 0.0) || !(rate_or_scale > 0.0) || !std::isfinite(shape) ||
        !std::isfinite(rate_or_scale)) {
        throw InvalidParameter("truncated gamma: shape and rate/scale must be > 0");
    }
    if (lo < 0.0) throw InvalidParameter("truncated gamma: support must lie in [0, inf)");
    const double scale = param == GammaParam::kRate ? 1.0 / rate_or_scale : rate_or_scale;
    return TruncatedDistribution(DistributionKind::kGamma, shape, scale, lo, hi);
}

TruncatedDistribution TruncatedDistribution::point_mass(double x) {
    if (!std::isfinite(x)) throw InvalidParameter("point mass must be finite");
    return TruncatedDistribution(DistributionKind::kPointMass, x, 0.0, x, x);
}

double TruncatedDistribution::base_cdf(double x) const {
    if (kind_ == DistributionKind::kPointMass) return x < p1_ ? 0.0 : 1.0;
    return visit_base(kind_, p1_, p2_, [&](const auto& d) { return cdf_at(d, x); });
}

double TruncatedDistribution::base_pdf(double x) const {
    if (kind_ == DistributionKind::kPointMass) {
        throw InvalidParameter("point mass has no density");
    }
    if (kind_ == DistributionKind::kGamma && x < 0.0) return 0.0;
    return visit_base(kind_, p1_, p2_, [&](const auto& d) { return bm::pdf(d, x); });
}

double TruncatedDistribution::pdf(double x) const {
    if (x < lo_ || x > hi_) return 0.0;
    return base_pdf(x) / normalizer_;
}

std::string TruncatedDistribution::describe() const {
    std::ostringstream os;
    os.precision(17);
    switch (kind_) {
        case DistributionKind::kNormal:
            os << "Normal(mu=" << p1_ << ", sigma=" << p2_ << ")";
            break;
        case DistributionKind::kGamma:
            os << "Gamma(shape=" << p1_ << ", scale=" << p2_ << ")";
            break;
        case DistributionKind::kPointMass:
            os << "PointMass(" << p1_ << ")";
            return os.str();
    }
    os << " on [" << lo_ << ", " << hi_ << "]";
    return os.str();
}

double sample(const TruncatedDistribution& dist, double u01) {
    if (dist.kind_ == DistributionKind::kPointMass) return dist.p1_;
    if (!(u01 >= 0.0) || !(u01 < 1.0)) {
        throw InvalidParameter("sample: u01 must lie in [0, 1)");
    }
    const double x = visit_base(dist.kind_, dist.p1_, dist.p2_, [&](const auto& d) {
        if (dist.upper_tail_) {
            const double q = dist.tail_lo_ - u01 * dist.normalizer_;
            if (q >= 1.0) return dist.lo_;
            if (q <= 0.0) return dist.hi_;
            return bm::quantile(bm::complement(d, q));
        }
        const double p = dist.tail_lo_ + u01 * dist.normalizer_;
        if (p <= 0.0) return dist.lo_;
        if (p >= 1.0) return dist.hi_;
        return bm::quantile(d, p);
    });
    return std::clamp(x, dist.lo_, dist.hi_);
}

MomentConditionReport check_moment_condition(const TruncatedDistribution& dist) {
    MomentConditionReport report;
    if (!std::isfinite(dist.lo()) || !std::isfinite(dist.hi())) {
        report.certified = false;
        report.h = std::numeric_limits<double>::infinity();
        report.message = "warning: unbounded support " + dist.describe() +
                         "; the moment bound E[|x|^r] <= m h^r is not certified";
        return report;
    }
    report.certified = true;
    report.m = 1.0;
    report.h = std::max(std::abs(dist.lo()), std::abs(dist.hi()));
    std::ostringstream os;
    os.precision(17);
    os << "certified: E[|x|^r] <= 1 * " << report.h << "^r (bounded support)";
    report.message = os.str();
    return report;
}

}  // namespace rcpde
