#include "doctest.h"

#include <cmath>

#include "ptsusy/numerics.hpp"
#include "ptsusy/sl2c.hpp"
#include "ptsusy/susy.hpp"

using namespace ptsusy;

namespace {

SuperpotentialSpec linear_w() {
    // W = x: factorization of the harmonic oscillator.
    SuperpotentialSpec w;
    w.f = ScalarField{[](double x) { return x; }, [](double) { return 1.0; }};
    w.g = ScalarField{[](double) { return 0.0; }, [](double) { return 0.0; }};
    return w;
}

} // namespace

TEST_SUITE("susy") {

TEST_CASE("partner_potentials: W = x gives V+(0) = -1, V-(0) = +1") {
    Grid grid(-8.0, 8.0, 2001);
    auto pair = partner_potentials(linear_w(), grid);
    const int mid = 1000;
    CHECK(pair.v_plus_R.values[mid].real() == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(pair.v_minus_R.values[mid].real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(max_abs(pair.v_plus_I) < 1e-12);
    CHECK(max_abs(pair.v_minus_I) < 1e-12);
}

TEST_CASE("partner_potentials: constant imaginary superpotential") {
    const double b = 0.75, e_r = 0.5;
    SuperpotentialSpec w;
    w.f = ScalarField{[](double) { return 0.0; }, [](double) { return 0.0; }};
    w.g = ScalarField{[b](double) { return b; }, [](double) { return 0.0; }};
    w.E_R = e_r;
    Grid grid(-3.0, 3.0, 301);
    auto pair = partner_potentials(w, grid);
    for (int i = 0; i < grid.n_points(); ++i) {
        CHECK(pair.v_plus_R.values[i].real() == doctest::Approx(-b * b + e_r).epsilon(1e-14));
        CHECK(pair.v_minus_R.values[i].real() == doctest::Approx(-b * b + e_r).epsilon(1e-14));
    }
    CHECK(max_abs(pair.v_plus_I) == 0.0);
    CHECK(max_abs(pair.v_minus_I) == 0.0);
}

TEST_CASE("partner_potentials: case I bridge at the origin gives -7/4") {
    Sl2cFamily fam{Sl2cCase::I, 1.0, 0.0, 1.0, 0.0, 0.0, +1};
    auto w = bridge_superpotential(fam);
    Grid grid(-6.0, 6.0, 1201); // x = 0 on the grid
    auto pair = partner_potentials(w, grid);
    const int mid = 600;
    CHECK(grid[mid] == doctest::Approx(0.0));
    // V+ = W^2 - W' + E_R coincides with V_m itself, no shift.
    const complex v_plus = pair.v_plus().values[mid];
    CHECK(v_plus.real() == doctest::Approx(-1.75).epsilon(1e-12));
    CHECK(std::abs(v_plus.imag()) < 1e-12);
}

TEST_CASE("partner identity: V+ = W^2 - W' + E with analytic derivatives") {
    auto check_spec = [](const SuperpotentialSpec& w, const Grid& grid) {
        auto pair = partner_potentials(w, grid);
        double worst = 0.0;
        for (int i = 0; i < grid.n_points(); ++i) {
            const double x = grid[i];
            const complex W = w.W(x);
            const complex Wp(w.f.derivative(x), w.g.derivative(x));
            const complex expect = W * W - Wp + w.energy();
            worst = std::max(worst, std::abs(pair.v_plus().values[i] - expect));
        }
        return worst;
    };
    Grid grid(-5.0, 5.0, 501);
    CHECK(check_spec(linear_w(), grid) < 1e-12);
    Sl2cFamily fam{Sl2cCase::I, 1.5, 0.25, 0.5, 0.3, 0.0, +1};
    CHECK(check_spec(bridge_superpotential(fam), grid) < 1e-12);
}

TEST_CASE("sign flips of f and g act as the exact sample-level symmetries") {
    // f -> -f turns W into -conj(W), so V+ and conj(V-) trade places:
    // the real parts swap and the imaginary parts swap with a sign.
    // g -> -g conjugates W, so both potentials conjugate in place.
    SuperpotentialSpec w;
    w.f = ScalarField{[](double x) { return std::sin(x); }, [](double x) { return std::cos(x); }};
    w.g = ScalarField{[](double x) { return 0.3 * x; }, [](double) { return 0.3; }};
    w.E_R = 0.7;

    SuperpotentialSpec w_flip_f = w;
    w_flip_f.f = ScalarField{[](double x) { return -std::sin(x); }, [](double x) { return -std::cos(x); }};
    SuperpotentialSpec w_flip_g = w;
    w_flip_g.g = ScalarField{[](double x) { return -0.3 * x; }, [](double) { return -0.3; }};

    Grid grid(-4.0, 4.0, 401);
    auto base = partner_potentials(w, grid);
    auto flip_f = partner_potentials(w_flip_f, grid);
    auto flip_g = partner_potentials(w_flip_g, grid);
    for (int i = 0; i < grid.n_points(); ++i) {
        CHECK(flip_f.v_plus_R.values[i] == base.v_minus_R.values[i]);
        CHECK(flip_f.v_minus_R.values[i] == base.v_plus_R.values[i]);
        CHECK(flip_f.v_plus_I.values[i] == -base.v_minus_I.values[i]);
        CHECK(flip_f.v_minus_I.values[i] == -base.v_plus_I.values[i]);

        CHECK(flip_g.v_plus_R.values[i] == base.v_plus_R.values[i]);
        CHECK(flip_g.v_minus_R.values[i] == base.v_minus_R.values[i]);
        CHECK(flip_g.v_plus_I.values[i] == -base.v_plus_I.values[i]);
        CHECK(flip_g.v_minus_I.values[i] == -base.v_minus_I.values[i]);
    }
}

TEST_CASE("apply_A annihilates the Gaussian zero mode of W = x") {
    Grid grid(-8.0, 8.0, 2001);
    auto psi = SampledFunction::sample_real(grid, [](double x) { return std::exp(-0.5 * x * x); });
    auto out = apply_A(linear_w(), psi);
    CHECK(l2_norm(out) / l2_norm(psi) < 1e-3);

    Grid fine(-8.0, 8.0, 4001);
    auto psi2 = SampledFunction::sample_real(fine, [](double x) { return std::exp(-0.5 * x * x); });
    const double r1 = l2_norm(apply_A(linear_w(), psi)) / l2_norm(psi);
    const double r2 = l2_norm(apply_A(linear_w(), psi2)) / l2_norm(psi2);
    CHECK(r1 / r2 > 3.0); // O(h^2)
}

TEST_CASE("apply_A with W = 0 is the derivative") {
    SuperpotentialSpec zero;
    zero.f = ScalarField{[](double) { return 0.0; }, {}};
    zero.g = ScalarField{[](double) { return 0.0; }, {}};
    Grid grid(0.0, 3.0, 301);
    auto psi = SampledFunction::sample_real(grid, [](double x) { return std::sin(x); });
    auto out = apply_A(zero, psi);
    auto expect = central_derivative(psi, 1);
    CHECK(max_abs_difference(out, expect) == 0.0);
}

TEST_CASE("A-dagger A on the Gaussian reproduces H+ psi0 = 0") {
    Grid grid(-8.0, 8.0, 4001);
    auto psi = SampledFunction::sample_real(grid, [](double x) { return std::exp(-0.5 * x * x); });
    auto out = apply_A_dagger(linear_w(), apply_A(linear_w(), psi));
    CHECK(l2_norm(out) / l2_norm(psi) < 1e-3);
}

TEST_CASE("intertwining residual: W = x with psi = x exp(-x^2/2)") {
    Grid grid(-8.0, 8.0, 4001);
    auto psi = SampledFunction::sample_real(grid, [](double x) { return x * std::exp(-0.5 * x * x); });
    CHECK(intertwining_residual(linear_w(), psi) < 1e-4);
}

TEST_CASE("intertwining residual: case I bridge with psi = sech") {
    Sl2cFamily fam{Sl2cCase::I, 1.0, 0.0, 1.0, 0.0, 0.0, +1};
    auto w = bridge_superpotential(fam);
    Grid grid(-8.0, 8.0, 4001);
    auto psi = SampledFunction::sample_real(grid, [](double x) { return 1.0 / std::cosh(x); });
    CHECK(intertwining_residual(w, psi) < 1e-3);
}

TEST_CASE("intertwining residual: W = 0 collapses to pure stencil error") {
    SuperpotentialSpec zero;
    zero.f = ScalarField{[](double) { return 0.0; }, [](double) { return 0.0; }};
    zero.g = ScalarField{[](double) { return 0.0; }, [](double) { return 0.0; }};
    Grid grid(-6.0, 6.0, 2001);
    auto psi = SampledFunction::sample_real(grid, [](double x) { return std::exp(-x * x); });
    CHECK(intertwining_residual(zero, psi) < 1e-5);
}

TEST_CASE("intertwining residual decreases at O(h^2)") {
    auto res = [](int n) {
        Grid grid(-8.0, 8.0, n);
        auto psi = SampledFunction::sample_real(grid, [](double x) { return x * std::exp(-0.5 * x * x); });
        return intertwining_residual(linear_w(), psi);
    };
    CHECK(res(2001) / res(4001) > 3.0);
}

TEST_CASE("zero_mode: W = x gives the L2-normalized Gaussian") {
    Grid grid(-8.0, 8.0, 2001);
    auto mode = zero_mode(linear_w(), grid, Sector::plus);
    CHECK(mode.normalizable);
    // Unit L2 norm and Gaussian shape up to normalization.
    auto sq = SampledFunction::zeros(grid);
    for (int i = 0; i < grid.n_points(); ++i) sq.values[i] = std::norm(mode.psi.values[i]);
    CHECK(trapezoid_total(sq).real() == doctest::Approx(1.0).epsilon(1e-10));
    const double ratio = mode.psi.values[1000].real() / std::pow(3.14159265358979323846, -0.25);
    CHECK(ratio == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("zero_mode: W = tanh x gives sech up to normalization") {
    // int tanh = log cosh is the oracle: psi+ = exp(-log cosh) = sech.
    SuperpotentialSpec w;
    w.f = ScalarField{[](double x) { return std::tanh(x); }, {}};
    w.g = ScalarField{[](double) { return 0.0; }, {}};
    Grid grid(-10.0, 10.0, 8001);
    auto mode = zero_mode(w, grid, Sector::plus);
    CHECK(mode.normalizable);
    const double at0 = mode.psi.values[4000].real();
    double worst = 0.0;
    for (int i = 0; i < grid.n_points(); ++i) {
        const double expect = at0 / std::cosh(grid[i]);
        worst = std::max(worst, std::abs(mode.psi.values[i].real() - expect));
    }
    CHECK(worst < 1e-6 * std::abs(at0));
}

TEST_CASE("zero_mode: minus sector flips the recipe") {
    SuperpotentialSpec w;
    w.f = ScalarField{[](double x) { return -x; }, {}};
    w.g = ScalarField{[](double) { return 0.0; }, {}};
    Grid grid(-8.0, 8.0, 2001);
    auto mode = zero_mode(w, grid, Sector::minus);
    CHECK(mode.normalizable);
    CHECK(std::abs(mode.psi.values[1000]) > std::abs(mode.psi.values[200]));
}

TEST_CASE("norm of A zero_mode(plus) shrinks at O(h^2)") {
    auto res = [](int n) {
        Grid grid(-8.0, 8.0, n);
        auto mode = zero_mode(linear_w(), grid, Sector::plus);
        return l2_norm(apply_A(linear_w(), mode.psi)) / l2_norm(mode.psi);
    };
    const double r1 = res(1001);
    const double r2 = res(2001);
    CHECK(r1 < 1e-3);
    CHECK(r1 / r2 > 3.0);
}

TEST_CASE("sector_selector: W = x, W = -x, W = 1") {
    Grid grid(-8.0, 8.0, 801);
    SuperpotentialSpec plus = linear_w();
    CHECK(sector_selector(plus, grid) == Sector::plus);

    SuperpotentialSpec minus;
    minus.f = ScalarField{[](double x) { return -x; }, {}};
    minus.g = ScalarField{[](double) { return 0.0; }, {}};
    CHECK(sector_selector(minus, grid) == Sector::minus);

    SuperpotentialSpec constant;
    constant.f = ScalarField{[](double) { return 1.0; }, {}};
    constant.g = ScalarField{[](double) { return 0.0; }, {}};
    CHECK(sector_selector(constant, grid) == Sector::neither);
}

TEST_CASE("pt_symmetry_check: even real + odd imaginary passes, shifted mirror fails") {
    Grid grid(-5.0, 5.0, 1001);
    auto v = SampledFunction::sample(grid, [](double x) {
        return complex(1.0 / std::cosh(x), std::sin(x));
    });
    auto check = pt_symmetry_check(v, 0.0);
    CHECK(check.symmetric);

    auto v_bad = SampledFunction::sample(grid, [](double x) {
        return complex(1.0 / std::cosh(x - 0.5), std::sin(x));
    });
    CHECK(!pt_symmetry_check(v_bad, 0.0).symmetric);
    CHECK_THROWS_AS(pt_symmetry_check(v, 1.0), std::invalid_argument);
}

} // TEST_SUITE
