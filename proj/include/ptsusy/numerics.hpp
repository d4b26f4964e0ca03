#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "ptsusy/grid.hpp"

namespace ptsusy {

/// Second-order finite differences on a uniform grid (order = 1 or 2).
/// Central stencils on interior points, one-sided second-order stencils at the
/// endpoints.  Requires at least 5 points.
SampledFunction central_derivative(const SampledFunction& f, int order);

/// Cumulative trapezoid integral F with F(x_min) = 0.
SampledFunction trapezoid_cumulative(const SampledFunction& f);

/// Total trapezoid integral over the grid.
complex trapezoid_total(const SampledFunction& f);

enum class Direction { forward, backward };

/// dy/dx = rhs(x, y) written into dydx; y may have any fixed dimension.
using OdeRhs = std::function<void(double x, std::span<const complex> y, std::span<complex> dydx)>;

/// Classical fixed-step RK4 along the grid.  trajectory[i] is the state at
/// grid point i regardless of direction; forward starts from y0 at x_min,
/// backward from y0 at x_max.  Throws integration_overflow if the state goes
/// non-finite, carrying the grid index at which it happened.
std::vector<std::vector<complex>> rk4_integrate(const OdeRhs& rhs,
                                                const std::vector<complex>& y0,
                                                const Grid& grid,
                                                Direction direction);

/// Roots of 4 e^3 - g2 e - g3 = 0.  When all three are real they are ordered
/// descending (e1 >= e2 >= e3); otherwise e1 is the real root and e2, e3 the
/// conjugate pair (positive imaginary part first).
struct CubicRoots {
    complex e1, e2, e3;
    bool all_real = false;
};

CubicRoots solve_depressed_cubic(double g2, double g3);

/// Locate a root (sign change) or an interior minimizer of f on [lo, hi] to
/// relative tolerance ~1e-12: bisection followed by a secant polish for
/// roots, golden-section for minima.  Throws bracket_error when the bracket
/// has neither.
double refine_root(const std::function<double(double)>& f, double lo, double hi);

} // namespace ptsusy
