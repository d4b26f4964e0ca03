#include "doctest.h"

#include <cmath>
#include <numbers>

#include "ptsusy/errors.hpp"
#include "ptsusy/numerics.hpp"

using namespace ptsusy;

namespace {

double cubic_residual(double g2, double g3, complex e) {
    return std::abs(4.0 * e * e * e - g2 * e - g3);
}

} // namespace

TEST_SUITE("numerics") {

TEST_CASE("central_derivative: exact for quadratics, order 1") {
    Grid g(0.0, 2.0, 201);
    auto f = SampledFunction::sample_real(g, [](double x) { return x * x; });
    auto d = central_derivative(f, 1);
    const int i = 100; // x = 1
    CHECK(g[i] == doctest::Approx(1.0));
    CHECK(d.values[i].real() == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("central_derivative: second derivative of a constant is zero") {
    Grid g(-1.0, 1.0, 101);
    auto f = SampledFunction::sample_real(g, [](double) { return 3.25; });
    auto d = central_derivative(f, 2);
    CHECK(max_abs(d) < 1e-10);
}

TEST_CASE("central_derivative: tanh' matches 1 - tanh^2 within 1e-6 at h=1e-3") {
    // Analytic derivative as the oracle.
    Grid g(-4.0, 4.0, 8001);
    auto f = SampledFunction::sample_real(g, [](double x) { return std::tanh(x); });
    auto d = central_derivative(f, 1);
    double worst = 0.0;
    for (int i = 0; i < g.n_points(); ++i) {
        const double t = std::tanh(g[i]);
        worst = std::max(worst, std::abs(d.values[i].real() - (1.0 - t * t)));
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("central_derivative: rejects tiny grids") {
    Grid g(0.0, 1.0, 4);
    auto f = SampledFunction::zeros(g);
    CHECK_THROWS_AS(central_derivative(f, 1), std::invalid_argument);
}

TEST_CASE("trapezoid_cumulative: sin over [0, pi]") {
    Grid g(0.0, std::numbers::pi, 10001);
    auto f = SampledFunction::sample_real(g, [](double x) { return std::sin(x); });
    auto F = trapezoid_cumulative(f);
    CHECK(F.values.front() == complex(0.0, 0.0));
    CHECK(std::abs(F.values.back().real() - 2.0) < 1e-6);
}

TEST_CASE("trapezoid_cumulative: zero integrand stays zero") {
    Grid g(0.0, 1.0, 11);
    auto F = trapezoid_cumulative(SampledFunction::zeros(g));
    CHECK(max_abs(F) == 0.0);
}

TEST_CASE("trapezoid_cumulative: sech total against 2 atan(tanh(x/2)) oracle") {
    Grid g(-10.0, 10.0, 10001);
    auto f = SampledFunction::sample_real(g, [](double x) { return 1.0 / std::cosh(x); });
    const double oracle = 2.0 * std::atan(std::tanh(5.0)) - 2.0 * std::atan(std::tanh(-5.0));
    CHECK(std::abs(trapezoid_total(f).real() - oracle) < 1e-6);
    CHECK(std::abs(trapezoid_cumulative(f).values.back().real() - oracle) < 1e-6);
}

TEST_CASE("trapezoid_cumulative is complex-linear") {
    Grid g(0.0, 2.0, 101);
    auto f = SampledFunction::sample(g, [](double x) { return complex(std::cos(x), x); });
    const complex alpha(0.5, -2.0);
    auto scaled = f;
    for (auto& v : scaled.values) v *= alpha;
    auto Fa = trapezoid_cumulative(scaled);
    auto F = trapezoid_cumulative(f);
    double worst = 0.0;
    for (int i = 0; i < g.n_points(); ++i) worst = std::max(worst, std::abs(Fa.values[i] - alpha * F.values[i]));
    CHECK(worst < 1e-13);
}

TEST_CASE("derivative of cumulative trapezoid recovers the integrand at O(h^2)") {
    auto err_for = [](int n) {
        Grid g(-2.0, 2.0, n);
        auto f = SampledFunction::sample_real(g, [](double x) { return std::exp(std::sin(2.0 * x)); });
        auto d = central_derivative(trapezoid_cumulative(f), 1);
        double worst = 0.0;
        for (int i = 1; i < n - 1; ++i) worst = std::max(worst, std::abs(d.values[i] - f.values[i]));
        return worst;
    };
    const double e1 = err_for(1001);
    const double e2 = err_for(2001);
    CHECK(e1 < 1e-4);
    CHECK(e1 / e2 > 3.0); // second-order convergence
}

TEST_CASE("rk4_integrate: exponential growth") {
    Grid g(0.0, 1.0, 1001);
    OdeRhs rhs = [](double, std::span<const complex> y, std::span<complex> d) { d[0] = y[0]; };
    auto traj = rk4_integrate(rhs, {complex(1.0, 0.0)}, g, Direction::forward);
    CHECK(std::abs(traj.back()[0] - std::exp(1.0)) < 1e-8);
}

TEST_CASE("rk4_integrate: zero field keeps the state constant") {
    Grid g(0.0, 5.0, 101);
    OdeRhs rhs = [](double, std::span<const complex>, std::span<complex> d) { d[0] = 0.0; };
    auto traj = rk4_integrate(rhs, {complex(2.0, -1.0)}, g, Direction::forward);
    for (const auto& y : traj) CHECK(y[0] == complex(2.0, -1.0));
}

TEST_CASE("rk4_integrate: harmonic oscillator hits cos(pi/2) = 0") {
    Grid g(0.0, 0.5 * std::numbers::pi, 1001);
    OdeRhs rhs = [](double, std::span<const complex> y, std::span<complex> d) {
        d[0] = y[1];
        d[1] = -y[0];
    };
    auto traj = rk4_integrate(rhs, {complex(1.0, 0.0), complex(0.0, 0.0)}, g, Direction::forward);
    CHECK(std::abs(traj.back()[0]) < 1e-8);
}

TEST_CASE("rk4_integrate: forward then backward returns to the start") {
    Grid g(0.0, 3.0, 601);
    OdeRhs rhs = [](double x, std::span<const complex> y, std::span<complex> d) {
        d[0] = std::cos(x) * y[1];
        d[1] = -std::sin(x) * y[0];
    };
    std::vector<complex> y0{complex(1.0, 0.5), complex(-0.25, 1.0)};
    auto fwd = rk4_integrate(rhs, y0, g, Direction::forward);
    auto back = rk4_integrate(rhs, fwd.back(), g, Direction::backward);
    CHECK(std::abs(back.front()[0] - y0[0]) < 1e-10);
    CHECK(std::abs(back.front()[1] - y0[1]) < 1e-10);
}

TEST_CASE("rk4_integrate: finite-time blowup raises integration_overflow with an index") {
    Grid g(0.0, 2.0, 2001);
    OdeRhs rhs = [](double, std::span<const complex> y, std::span<complex> d) { d[0] = y[0] * y[0]; };
    try {
        rk4_integrate(rhs, {complex(1.0, 0.0)}, g, Direction::forward);
        FAIL("expected integration_overflow");
    } catch (const integration_overflow& e) {
        CHECK(e.index() > 0);
        CHECK(e.index() < 2001);
    }
}

TEST_CASE("solve_depressed_cubic: (4, 0) gives {1, 0, -1}") {
    auto r = solve_depressed_cubic(4.0, 0.0);
    CHECK(r.all_real);
    CHECK(std::abs(r.e1 - complex(1.0)) < 1e-12);
    CHECK(std::abs(r.e2) < 1e-12);
    CHECK(std::abs(r.e3 - complex(-1.0)) < 1e-12);
}

TEST_CASE("solve_depressed_cubic: degenerate pair {1/sqrt3, 1/sqrt3, -2/sqrt3}") {
    const double g3 = -8.0 / std::pow(3.0, 1.5);
    auto r = solve_depressed_cubic(4.0, g3);
    const double s = 1.0 / std::sqrt(3.0);
    CHECK(std::abs(r.e1 - complex(s)) < 1e-7);
    CHECK(std::abs(r.e2 - complex(s)) < 1e-7);
    CHECK(std::abs(r.e3 - complex(-2.0 * s)) < 1e-7);
}

TEST_CASE("solve_depressed_cubic: triple root at the origin") {
    auto r = solve_depressed_cubic(0.0, 0.0);
    CHECK(r.all_real);
    CHECK(std::abs(r.e1) == 0.0);
    CHECK(std::abs(r.e2) == 0.0);
    CHECK(std::abs(r.e3) == 0.0);
}

TEST_CASE("solve_depressed_cubic: residuals and zero root sum over a parameter sweep") {
    for (double g2 : {-5.0, -1.0, 0.0, 0.3, 1.0, 4.0, 25.0}) {
        for (double g3 : {-10.0, -1.5, -0.2, 0.0, 0.1, 2.0, 8.0}) {
            auto r = solve_depressed_cubic(g2, g3);
            const double scale = std::max({1.0, std::abs(g2), std::abs(g3)});
            CHECK(cubic_residual(g2, g3, r.e1) < 1e-10 * scale);
            CHECK(cubic_residual(g2, g3, r.e2) < 1e-10 * scale);
            CHECK(cubic_residual(g2, g3, r.e3) < 1e-10 * scale);
            CHECK(std::abs(r.e1 + r.e2 + r.e3) < 1e-10 * scale);
            if (r.all_real) {
                CHECK(r.e1.real() >= r.e2.real());
                CHECK(r.e2.real() >= r.e3.real());
            }
        }
    }
}

TEST_CASE("refine_root: sqrt(2) via sign change") {
    auto x = refine_root([](double e) { return e * e - 2.0; }, 1.0, 2.0);
    CHECK(std::abs(x - std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("refine_root: linear root at zero") {
    auto x = refine_root([](double e) { return e; }, -1.0, 1.0);
    CHECK(std::abs(x) < 1e-12);
}

TEST_CASE("refine_root: interior minimum of |x - 0.3|") {
    auto x = refine_root([](double e) { return std::abs(e - 0.3); }, 0.0, 1.0);
    CHECK(std::abs(x - 0.3) < 1e-10);
}

TEST_CASE("refine_root: monotone function without a root is a bracket error") {
    CHECK_THROWS_AS(refine_root([](double e) { return 1.0 + e * 0.1; }, 0.0, 1.0), bracket_error);
}

} // TEST_SUITE
