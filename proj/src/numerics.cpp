#include "ptsusy/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ptsusy/errors.hpp"

namespace ptsusy {

SampledFunction central_derivative(const SampledFunction& f, int order) {
    const int n = f.size();
    if (n < 5) throw std::invalid_argument("central_derivative: needs at least 5 points");
    if (order != 1 && order != 2) throw std::invalid_argument("central_derivative: order must be 1 or 2");

    const double h = f.grid.spacing();
    const auto& v = f.values;
    std::vector<complex> d(static_cast<std::size_t>(n));

    if (order == 1) {
        const double inv2h = 1.0 / (2.0 * h);
        d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) * inv2h;
        for (int i = 1; i < n - 1; ++i) {
            d[static_cast<std::size_t>(i)] =
                (v[static_cast<std::size_t>(i + 1)] - v[static_cast<std::size_t>(i - 1)]) * inv2h;
        }
        d[static_cast<std::size_t>(n - 1)] =
            (3.0 * v[static_cast<std::size_t>(n - 1)] - 4.0 * v[static_cast<std::size_t>(n - 2)] +
             v[static_cast<std::size_t>(n - 3)]) * inv2h;
    } else {
        const double invh2 = 1.0 / (h * h);
        d[0] = (2.0 * v[0] - 5.0 * v[1] + 4.0 * v[2] - v[3]) * invh2;
        for (int i = 1; i < n - 1; ++i) {
            d[static_cast<std::size_t>(i)] =
                (v[static_cast<std::size_t>(i + 1)] - 2.0 * v[static_cast<std::size_t>(i)] +
                 v[static_cast<std::size_t>(i - 1)]) * invh2;
        }
        d[static_cast<std::size_t>(n - 1)] =
            (2.0 * v[static_cast<std::size_t>(n - 1)] - 5.0 * v[static_cast<std::size_t>(n - 2)] +
             4.0 * v[static_cast<std::size_t>(n - 3)] - v[static_cast<std::size_t>(n - 4)]) * invh2;
    }
    return SampledFunction(f.grid, std::move(d));
}

SampledFunction trapezoid_cumulative(const SampledFunction& f) {
    f.require_finite("trapezoid_cumulative");
    const int n = f.size();
    const double half_h = 0.5 * f.grid.spacing();
    std::vector<complex> out(static_cast<std::size_t>(n));
    out[0] = complex(0.0, 0.0);
    for (int i = 1; i < n; ++i) {
        out[static_cast<std::size_t>(i)] =
            out[static_cast<std::size_t>(i - 1)] +
            half_h * (f.values[static_cast<std::size_t>(i - 1)] + f.values[static_cast<std::size_t>(i)]);
    }
    return SampledFunction(f.grid, std::move(out));
}

complex trapezoid_total(const SampledFunction& f) {
    f.require_finite("trapezoid_total");
    complex s(0.0, 0.0);
    for (int i = 1; i < f.size(); ++i) {
        s += f.values[static_cast<std::size_t>(i - 1)] + f.values[static_cast<std::size_t>(i)];
    }
    return 0.5 * f.grid.spacing() * s;
}

namespace {

bool state_finite(std::span<const complex> y) {
    for (const complex& v : y) {
        if (!is_finite(v)) return false;
    }
    return true;
}

} // namespace

std::vector<std::vector<complex>> rk4_integrate(const OdeRhs& rhs,
                                                const std::vector<complex>& y0,
                                                const Grid& grid,
                                                Direction direction) {
    const int n = grid.n_points();
    const std::size_t dim = y0.size();
    const double h = (direction == Direction::forward) ? grid.spacing() : -grid.spacing();

    std::vector<std::vector<complex>> traj(static_cast<std::size_t>(n));
    std::vector<complex> y = y0;
    std::vector<complex> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);

    const int start = (direction == Direction::forward) ? 0 : n - 1;
    const int step = (direction == Direction::forward) ? 1 : -1;
    traj[static_cast<std::size_t>(start)] = y;

    int i = start;
    for (int s = 0; s < n - 1; ++s, i += step) {
        const double x = grid[i];
        rhs(x, y, k1);
        for (std::size_t j = 0; j < dim; ++j) tmp[j] = y[j] + 0.5 * h * k1[j];
        rhs(x + 0.5 * h, tmp, k2);
        for (std::size_t j = 0; j < dim; ++j) tmp[j] = y[j] + 0.5 * h * k2[j];
        rhs(x + 0.5 * h, tmp, k3);
        for (std::size_t j = 0; j < dim; ++j) tmp[j] = y[j] + h * k3[j];
        rhs(x + h, tmp, k4);
        for (std::size_t j = 0; j < dim; ++j) {
            y[j] += (h / 6.0) * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
        }
        const int inext = i + step;
        if (!state_finite(y)) {
            throw integration_overflow("rk4_integrate: non-finite state", static_cast<std::size_t>(inext));
        }
        traj[static_cast<std::size_t>(inext)] = y;
    }
    return traj;
}

namespace {

double cubic_value(double g2, double g3, double e) {
    return ((4.0 * e * e) - g2) * e - g3;
}

// One guarded Newton step; near-multiple roots are left untouched.
double polish_cubic_root(double g2, double g3, double e) {
    const double scale = std::max({1.0, std::abs(g2), std::abs(g3)});
    for (int it = 0; it < 2; ++it) {
        const double p = cubic_value(g2, g3, e);
        const double dp = 12.0 * e * e - g2;
        if (std::abs(dp) < 1e-8 * scale) break;
        e -= p / dp;
    }
    return e;
}

} // namespace

CubicRoots solve_depressed_cubic(double g2, double g3) {
    if (!std::isfinite(g2) || !std::isfinite(g3)) {
        throw std::invalid_argument("solve_depressed_cubic: invariants must be finite");
    }
    CubicRoots out;
    const double disc = g2 * g2 * g2 - 27.0 * g3 * g3;

    if (disc > 0.0) {
        // Three distinct real roots: e_k = sqrt(g2/3) cos((acos t - 2 pi k)/3),
        // which come out in descending order.
        const double r = std::sqrt(g2 / 3.0);
        double t = g3 / (r * r * r);
        t = std::clamp(t, -1.0, 1.0);
        const double theta = std::acos(t);
        const double two_pi = 2.0 * 3.14159265358979323846;
        double e1 = r * std::cos(theta / 3.0);
        double e2 = r * std::cos((theta - two_pi) / 3.0);
        double e3 = r * std::cos((theta + two_pi) / 3.0);
        e1 = polish_cubic_root(g2, g3, e1);
        e2 = polish_cubic_root(g2, g3, e2);
        e3 = polish_cubic_root(g2, g3, e3);
        out.e1 = e1;
        out.e2 = e2;
        out.e3 = e3;
        out.all_real = true;
    } else if (disc == 0.0) {
        // Double root p (triple root 0 when g2 = g3 = 0).
        const double p = (g2 == 0.0) ? 0.0 : -1.5 * g3 / g2;
        const double q = -2.0 * p;
        out.all_real = true;
        if (p >= q) {
            out.e1 = p;
            out.e2 = p;
            out.e3 = q;
        } else {
            out.e1 = q;
            out.e2 = p;
            out.e3 = p;
        }
    } else {
        // One real root plus a conjugate pair (Cardano on e^3 - (g2/4) e - g3/4).
        const double p = -0.25 * g2;
        const double q = -0.25 * g3;
        const double delta = 0.25 * q * q + p * p * p / 27.0;
        const double sq = std::sqrt(delta);
        const double u = std::cbrt(-0.5 * q + sq);
        const double v = std::cbrt(-0.5 * q - sq);
        double real_root = polish_cubic_root(g2, g3, u + v);
        const double re_pair = -0.5 * (u + v);
        const double im_pair = 0.5 * std::sqrt(3.0) * (u - v);
        out.e1 = real_root;
        out.e2 = complex(re_pair, std::abs(im_pair));
        out.e3 = complex(re_pair, -std::abs(im_pair));
        out.all_real = false;
    }
    return out;
}

namespace {

constexpr double kGoldenRatio = 0.61803398874989484820;

double golden_section_minimize(const std::function<double(double)>& f, double a, double b) {
    double x1 = b - kGoldenRatio * (b - a);
    double x2 = a + kGoldenRatio * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int it = 0; it < 200; ++it) {
        if ((b - a) < 1e-12 * std::max({1.0, std::abs(a), std::abs(b)})) break;
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGoldenRatio * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGoldenRatio * (b - a);
            f2 = f(x2);
        }
    }
    return (f1 < f2) ? x1 : x2;
}

} // namespace

double refine_root(const std::function<double(double)>& f, double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("refine_root: requires lo < hi");
    double fa = f(lo);
    double fb = f(hi);
    if (fa == 0.0) return lo;
    if (fb == 0.0) return hi;

    if (fa * fb < 0.0) {
        double a = lo, b = hi;
        for (int it = 0; it < 200; ++it) {
            if ((b - a) < 1e-13 * std::max({1.0, std::abs(a), std::abs(b)})) break;
            const double m = 0.5 * (a + b);
            const double fm = f(m);
            if (fm == 0.0) return m;
            if (fa * fm < 0.0) {
                b = m;
                fb = fm;
            } else {
                a = m;
                fa = fm;
            }
        }
        // Secant polish inside the final bracket.
        double x0 = a, f0 = fa, x1 = b, f1 = fb;
        for (int it = 0; it < 4; ++it) {
            const double denom = f1 - f0;
            if (denom == 0.0) break;
            double x2 = x1 - f1 * (x1 - x0) / denom;
            if (!(x2 >= lo && x2 <= hi)) x2 = 0.5 * (a + b);
            const double f2 = f(x2);
            x0 = x1;
            f0 = f1;
            x1 = x2;
            f1 = f2;
            if (f2 == 0.0) break;
        }
        return (std::abs(f1) <= std::abs(f0)) ? x1 : x0;
    }

    // No sign change: look for an interior minimum.
    const int n_scan = 64;
    double best_x = lo, best_f = fa;
    int best_i = 0;
    for (int i = 1; i <= n_scan; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / n_scan;
        const double fx = (i == n_scan) ? fb : f(x);
        if (fx < best_f) {
            best_f = fx;
            best_x = x;
            best_i = i;
        }
    }
    if (best_i == 0 || best_i == n_scan) {
        throw bracket_error("refine_root: no sign change and no interior minimum in bracket");
    }
    const double step = (hi - lo) / n_scan;
    return golden_section_minimize(f, best_x - step, best_x + step);
}

} // namespace ptsusy
