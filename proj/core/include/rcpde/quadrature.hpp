#pragma once

#include <vector>

#include "rcpde/kernel.hpp"
#include "rcpde/linalg.hpp"
#include "rcpde/problem.hpp"

namespace rcpde {

/// How the frequency nodes are laid out on the truncated range [0, R].
enum class NodeLayout {
    /// N cells of width h = R/N, nodes at (j + 1/2) h, j = 0..N-1.
    kMidpoint,
    /// Legacy layout of the tabulated benchmarks: N-1 cells of width
    /// R/(N-2), i.e. the points of linspace(0, R, N-1) shifted by half a
    /// step. The last cell ends at R + step.
    kShiftedLinspace,
};

/// Frequency grid for the truncated inverse cosine transform.
/// The step is always derived from R and N, never stored independently.
class QuadratureGrid {
public:
    /// Throws InvalidParameter unless R > 0 and N >= 1 (N >= 3 for the
    /// shifted layout).
    QuadratureGrid(double R, int N, NodeLayout layout = NodeLayout::kMidpoint);

    /// N = round(R/h); throws InvalidParameter when R/h is not an integer
    /// to within 1e-9 relative.
    static QuadratureGrid from_step(double R, double h, NodeLayout layout = NodeLayout::kMidpoint);

    double radius() const noexcept { return radius_; }
    int intervals() const noexcept { return intervals_; }
    NodeLayout layout() const noexcept { return layout_; }

    /// Cell width (R/N for the midpoint layout).
    double step() const noexcept;
    int node_count() const noexcept;
    double node(int j) const noexcept { return (j + 0.5) * step(); }
    std::vector<double> nodes() const;

private:
    double radius_;
    int intervals_;
    NodeLayout layout_;
};

/// V(t)(omega) sampled on a grid's nodes. Independent of z, so one sweep
/// serves every z at the same t.
struct KernelSweep {
    double t = 0.0;
    double step = 0.0;
    std::vector<double> nodes;
    std::vector<Vector2> values;
};

/// Kernel evaluations are independent across nodes and may run on
/// `threads` workers; the result does not depend on the worker count.
KernelSweep sweep_kernel(const CoupledProblem& p, const QuadratureGrid& grid, double t,
                         const KernelOptions& opts = {}, int threads = 1);

/// (2 h / pi) * sum_j V_j cos(omega_j z), summed in ascending node order.
Vector2 invert_sweep(const KernelSweep& sweep, double z);

Vector2 midpoint_inverse(const CoupledProblem& p, const QuadratureGrid& grid, double z, double t,
                         const KernelOptions& opts = {});

/// M-point Gauss-Laguerre rule for the weight e^{-x} on [0, inf).
struct GaussLaguerreRule {
    int degree = 0;
    std::vector<double> abscissae;
    std::vector<double> weights;

    /// 1 <= M <= 64. Golub-Welsch eigenvalues polished by Newton steps on the
    /// Laguerre three-term recurrence.
    static GaussLaguerreRule make(int M);
};

/// (2/pi) * sum_k w_k e^{x_k} V(t)(x_k) cos(x_k z).
Vector2 gauss_laguerre_inverse(const CoupledProblem& p, const GaussLaguerreRule& rule, double z,
                               double t, const KernelOptions& opts = {});

/// n-point Gauss-Legendre rule mapped to [lo, hi].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    static GaussLegendreRule make(int n, double lo = -1.0, double hi = 1.0);
};

/// Upper bounds on the tails J1(R), J2(R) of the inverse transform integral.
struct TruncationBound {
    double bound_J1 = 0.0;
    double bound_J2 = 0.0;
    double R = 0.0;

    double total() const noexcept { return bound_J1 + bound_J2; }
};

/// bound_J1 = F_sup sqrt(pi) / (2 sqrt(bt)) e^{mu(A) t} erfc(R sqrt(bt))
/// bound_J2 = sqrt(pi) ||B|| / b * int_0^{sqrt(bt)} g_sup e^{mu(A) v^2/b} erfc(R v) dv
/// with ||B|| the entrywise-sum norm and a 256-panel midpoint rule in v over
/// [0, min(sqrt(bt), 27/R)], outside of which erfc(R v) is zero in double.
TruncationBound truncation_bound(const CoupledProblem& p, double R, double t, double F_sup,
                                 double g_sup);

/// Smallest R such that (2/pi)(bound_J1 + bound_J2) <= tol: doubling search
/// over {1, 2, 4, ...} followed by bisection to three significant figures.
/// Throws RadiusOverflow when R would exceed 1e6.
double select_radius(const CoupledProblem& p, double t, double F_sup, double g_sup, double tol);

}  // namespace rcpde
