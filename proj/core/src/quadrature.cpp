#include "rcpde/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rcpde/errors.hpp"
#include "rcpde/parallel.hpp"

namespace rcpde {

namespace {

constexpr double kTwoOverPi = 2.0 / std::numbers::pi;
constexpr int kBoundPanels = 256;
constexpr double kErfcCutoff = 27.0;
constexpr double kMaxRadius = 1e6;
constexpr int kBisectionSteps = 11;  // 2^-11 < 5e-4: three significant figures
constexpr int kMaxLaguerreDegree = 64;

struct LaguerrePair {
    double value;     // L_M(x)
    double previous;  // L_{M-1}(x)
};

LaguerrePair laguerre(int m, double x) {
    double prev = 1.0;
    double cur = 1.0 - x;
    if (m == 0) return {1.0, 0.0};
    for (int k = 1; k < m; ++k) {
        const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return {cur, prev};
}

}  // namespace

QuadratureGrid::QuadratureGrid(double R, int N, NodeLayout layout)
    : radius_(R), intervals_(N), layout_(layout) {
    if (!(R > 0.0) || !std::isfinite(R)) {
        throw InvalidParameter("QuadratureGrid: radius must be > 0, got " + std::to_string(R));
    }
    const int min_n = layout == NodeLayout::kShiftedLinspace ? 3 : 1;
    if (N < min_n) {
        throw InvalidParameter("QuadratureGrid: need at least " + std::to_string(min_n) +
                               " intervals, got " + std::to_string(N));
    }
}

QuadratureGrid QuadratureGrid::from_step(double R, double h, NodeLayout layout) {
    if (!(h > 0.0) || !(R > 0.0)) {
        throw InvalidParameter("QuadratureGrid::from_step: need R > 0 and h > 0");
    }
    const double ratio = R / h;
    const double n = std::round(ratio);
    if (n < 1.0 || std::abs(ratio - n) > 1e-9 * std::max(1.0, ratio)) {
        throw InvalidParameter("QuadratureGrid::from_step: R/h = " + std::to_string(ratio) +
                               " is not a positive integer");
    }
    return QuadratureGrid(R, static_cast<int>(n), layout);
}

double QuadratureGrid::step() const noexcept {
    switch (layout_) {
        case NodeLayout::kShiftedLinspace:
            return radius_ / (intervals_ - 2);
        case NodeLayout::kMidpoint:
            break;
    }
    return radius_ / intervals_;
}

int QuadratureGrid::node_count() const noexcept {
    return layout_ == NodeLayout::kShiftedLinspace ? intervals_ - 1 : intervals_;
}

std::vector<double> QuadratureGrid::nodes() const {
    std::vector<double> out(static_cast<std::size_t>(node_count()));
    for (int j = 0; j < node_count(); ++j) out[static_cast<std::size_t>(j)] = node(j);
    return out;
}

KernelSweep sweep_kernel(const CoupledProblem& p, const QuadratureGrid& grid, double t,
                         const KernelOptions& opts, int threads) {
    KernelSweep sweep;
    sweep.t = t;
    sweep.step = grid.step();
    sweep.nodes = grid.nodes();
    sweep.values.resize(sweep.nodes.size());
    detail::parallel_for(sweep.nodes.size(), threads, [&](std::size_t j) {
        sweep.values[j] = kernel_value(p, sweep.nodes[j], t, opts);
    });
    return sweep;
}

Vector2 invert_sweep(const KernelSweep& sweep, double z) {
    Vector2 sum{};
    for (std::size_t j = 0; j < sweep.nodes.size(); ++j) {
        sum += std::cos(sweep.nodes[j] * z) * sweep.values[j];
    }
    return (kTwoOverPi * sweep.step) * sum;
}

Vector2 midpoint_inverse(const CoupledProblem& p, const QuadratureGrid& grid, double z, double t,
                         const KernelOptions& opts) {
    if (!(z >= 0.0) || !(t > 0.0)) {
        throw InvalidParameter("midpoint_inverse: need z >= 0 and t > 0");
    }
    return invert_sweep(sweep_kernel(p, grid, t, opts), z);
}

GaussLaguerreRule GaussLaguerreRule::make(int M) {
    if (M < 1 || M > kMaxLaguerreDegree) {
        throw InvalidParameter("GaussLaguerreRule: degree must be in [1, 64], got " +
                               std::to_string(M));
    }
    // Golub-Welsch: Jacobi matrix with diagonal 2k+1 and off-diagonal k.
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(M, M);
    for (int k = 0; k < M; ++k) {
        jacobi(k, k) = 2.0 * k + 1.0;
        if (k + 1 < M) {
            jacobi(k, k + 1) = k + 1.0;
            jacobi(k + 1, k) = k + 1.0;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi, Eigen::EigenvaluesOnly);

    GaussLaguerreRule rule;
    rule.degree = M;
    rule.abscissae.resize(static_cast<std::size_t>(M));
    rule.weights.resize(static_cast<std::size_t>(M));
    for (int k = 0; k < M; ++k) {
        double x = solver.eigenvalues()(k);
        for (int it = 0; it < 8; ++it) {
            const auto [lm, lm1] = laguerre(M, x);
            const double deriv = M * (lm - lm1) / x;
            const double dx = lm / deriv;
            x -= dx;
            if (std::abs(dx) <= 1e-15 * std::abs(x)) break;
        }
        // w = x / ((M+1)^2 L_{M+1}(x)^2)
        const double next = laguerre(M + 1, x).value;
        rule.abscissae[static_cast<std::size_t>(k)] = x;
        rule.weights[static_cast<std::size_t>(k)] = x / ((M + 1.0) * (M + 1.0) * next * next);
    }
    return rule;
}

Vector2 gauss_laguerre_inverse(const CoupledProblem& p, const GaussLaguerreRule& rule, double z,
                               double t, const KernelOptions& opts) {
    if (!(z >= 0.0) || !(t > 0.0)) {
        throw InvalidParameter("gauss_laguerre_inverse: need z >= 0 and t > 0");
    }
    Vector2 sum{};
    for (std::size_t k = 0; k < rule.abscissae.size(); ++k) {
        const double x = rule.abscissae[k];
        sum += (rule.weights[k] * std::exp(x) * std::cos(x * z)) * kernel_value(p, x, t, opts);
    }
    return kTwoOverPi * sum;
}

GaussLegendreRule GaussLegendreRule::make(int n, double lo, double hi) {
    if (n < 1) throw InvalidParameter("GaussLegendreRule: need n >= 1");
    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double deriv = 1.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            deriv = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / deriv;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * deriv * deriv);
        const auto lo_idx = static_cast<std::size_t>(i);
        const auto hi_idx = static_cast<std::size_t>(n - 1 - i);
        rule.nodes[lo_idx] = mid - half * x;
        rule.nodes[hi_idx] = mid + half * x;
        rule.weights[lo_idx] = half * w;
        rule.weights[hi_idx] = half * w;
    }
    return rule;
}

TruncationBound truncation_bound(const CoupledProblem& p, double R, double t, double F_sup,
                                 double g_sup) {
    if (!(R >= 0.0) || !(t > 0.0) || !(F_sup >= 0.0) || !(g_sup >= 0.0)) {
        throw InvalidParameter("truncation_bound: need R >= 0, t > 0, F_sup >= 0, g_sup >= 0");
    }
    const double b = p.b();
    const double mu_a = log_norm(p.A());
    const double root_bt = std::sqrt(b * t);
    const double sqrt_pi = std::sqrt(std::numbers::pi);

    TruncationBound out;
    out.R = R;
    out.bound_J1 = F_sup == 0.0
                       ? 0.0
                       : F_sup * sqrt_pi / (2.0 * root_bt) * std::exp(mu_a * t) * erfc(R * root_bt);

    // erfc(R v) vanishes for R v > 27, so the panels only cover the part of
    // [0, sqrt(bt)] where the integrand is nonzero.
    const double v_max = R > 0.0 ? std::min(root_bt, kErfcCutoff / R) : root_bt;
    const double dv = v_max / kBoundPanels;
    double integral = 0.0;
    for (int k = 0; k < kBoundPanels; ++k) {
        const double v = (k + 0.5) * dv;
        integral += std::exp(mu_a * v * v / b) * erfc(R * v);
    }
    out.bound_J2 = sqrt_pi * norm_entry_sum(p.B()) / b * g_sup * integral * dv;
    return out;
}

double select_radius(const CoupledProblem& p, double t, double F_sup, double g_sup, double tol) {
    if (!(tol > 0.0)) throw InvalidParameter("select_radius: tol must be > 0");
    const double target = tol * std::numbers::pi / 2.0;
    auto ok = [&](double R) { return truncation_bound(p, R, t, F_sup, g_sup).total() <= target; };

    double hi = 1.0;
    if (ok(hi)) return hi;
    while (!ok(hi)) {
        hi *= 2.0;
        if (hi > kMaxRadius) {
            throw RadiusOverflow("select_radius: tolerance " + std::to_string(tol) +
                                 " needs R > 1e6");
        }
    }
    double lo = hi / 2.0;
    for (int i = 0; i < kBisectionSteps; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (ok(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

}  // namespace rcpde
