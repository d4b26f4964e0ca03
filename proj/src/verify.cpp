#include "ptsusy/verify.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "ptsusy/elliptic.hpp"
#include "ptsusy/numerics.hpp"
#include "ptsusy/sl2c.hpp"
#include "ptsusy/spectral.hpp"
#include "ptsusy/susy.hpp"

namespace ptsusy {

namespace {

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(3);
    s << v;
    return s.str();
}

EllipticParams fig1_params() {
    return EllipticParams{std::sqrt(3.0), 4.0 * std::sqrt(2.0 / std::sqrt(3.0)), 0.0};
}

EllipticParams fig2_params() {
    return EllipticParams{std::sqrt(3.0), 8.0 / std::pow(3.0, 0.25), 0.0};
}

struct Outcome {
    bool ok = true;
    std::ostringstream text;

    void require(bool cond, const std::string& what) {
        ok = ok && cond;
        if (!text.str().empty()) text << "; ";
        text << what << (cond ? "" : " [FAILED]");
    }
};

using CheckFn = void (*)(Outcome&, const VerifyOptions&);

CheckResult timed(const char* name, const VerifyOptions& opt, CheckFn fn) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        fn(out, opt);
    } catch (const std::exception& e) {
        out.ok = false;
        out.text << " [exception: " << e.what() << "]";
    }
    const auto t1 = std::chrono::steady_clock::now();
    CheckResult r;
    r.name = name;
    r.passed = out.ok;
    r.detail = out.text.str();
    r.elapsed_s = std::chrono::duration<double>(t1 - t0).count();
    return r;
}

void check_fig1_invariants(Outcome& out, const VerifyOptions&) {
    const auto t0 = std::chrono::steady_clock::now();
    auto data = invariants_from(fig1_params());
    const double omega_ref =
        std::sqrt(std::numbers::pi) * std::tgamma(1.25) / std::tgamma(0.75);
    const double g2_err = std::abs(data.g2 - 4.0);
    const double g3_err = std::abs(data.g3);
    const double root_err = std::max({std::abs(data.roots.e1 - complex(1.0)),
                                      std::abs(data.roots.e2),
                                      std::abs(data.roots.e3 - complex(-1.0))});
    const double omega_err = std::abs(data.omega - omega_ref);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.require(g2_err < 1e-12, "g2 err " + fmt(g2_err));
    out.require(g3_err < 1e-12, "g3 err " + fmt(g3_err));
    out.require(root_err < 1e-10, "root err " + fmt(root_err));
    out.require(omega_err < 1e-6, "omega err " + fmt(omega_err));
    out.require(elapsed < 1.0, "runtime " + fmt(elapsed) + " s");
}

void check_fig1_vplus_minimum(Outcome& out, const VerifyOptions&) {
    auto p = fig1_params();
    auto data = invariants_from(p);
    Grid grid = Grid::interior(0.0, 2.0 * data.omega, 4001);
    auto pair = elliptic_pair(p, data, grid);

    int arg_min = 0;
    double vmin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid.n_points(); ++i) {
        if (pair.v_plus_R.values[i].real() < vmin) {
            vmin = pair.v_plus_R.values[i].real();
            arg_min = i;
        }
    }
    const double expect = 6.0 * (1.0 - 1.0 / std::sqrt(3.0));
    const double at_omega = std::abs(pair.v_minus_I.values[(grid.n_points() - 1) / 2]);
    out.require(std::abs(vmin - expect) < 1e-6, "min V+R err " + fmt(std::abs(vmin - expect)));
    out.require(std::abs(grid[arg_min] - data.omega) <= grid.spacing(),
                "argmin offset " + fmt(std::abs(grid[arg_min] - data.omega)));
    out.require(at_omega < 1e-8, "V-I(omega) " + fmt(at_omega));
}

void check_fig1_origin_asymptotics(Outcome& out, const VerifyOptions&) {
    auto p = fig1_params();
    auto data = invariants_from(p);
    auto vz2 = [&](double z) {
        const double P = wp(z, data) + p.E_R / 3.0;
        return (2.0 * P - p.a * p.a / (12.0 * P * P)) * z * z;
    };
    const double z = 1e-3 * data.omega;
    const double richardson = (4.0 * vz2(0.5 * z) - vz2(z)) / 3.0;
    out.require(std::abs(richardson - 2.0) < 0.02, "V+R z^2 -> " + fmt(richardson));
}

void check_fig2_tail_asymptotics(Outcome& out, const VerifyOptions&) {
    auto p = fig2_params();
    auto data = invariants_from(p);
    const double z = 6.0 / std::sqrt(p.E_R);
    Grid probe(z, z + 1.0, 11);
    auto pair = elliptic_pair(p, data, probe);
    const double ratio =
        pair.v_plus_R.values[0].real() / (24.0 * p.E_R * std::exp(-2.0 * std::sqrt(p.E_R) * z));
    out.require(std::abs(ratio - 1.0) < 0.01, "tail ratio " + fmt(ratio));
}

void constraint_block(Outcome& out, const Sl2cFamily& fam, const Grid& grid, double perturb,
                      const char* label) {
    auto [rF, rG] = constraint_residual(fam, grid, perturb);
    out.require(rF < 1e-6, std::string(label) + " F-residual " + fmt(rF));
    out.require(rG < 1e-6, std::string(label) + " G-residual " + fmt(rG));
}

void check_constraints_case_i(Outcome& out, const VerifyOptions& opt) {
    Grid grid(-8.0, 8.0, 16001); // h = 1e-3
    constraint_block(out, Sl2cFamily{Sl2cCase::I, 1.75, 0.4, 0.8, 0.0, 0.0, +1}, grid,
                     opt.perturb, "gamma=0");
    constraint_block(out, Sl2cFamily{Sl2cCase::I, 2.0, 0.3, 0.5, 0.2, std::numbers::pi / 8.0, +1},
                     grid, opt.perturb, "gamma=pi/8");
}

void check_constraints_case_ii(Outcome& out, const VerifyOptions& opt) {
    Grid grid(1.5, 9.5, 8001); // h = 1e-3, clear of the x = c singularity
    constraint_block(out, Sl2cFamily{Sl2cCase::II, 2.5, 0.0, 0.6, 0.0, 0.0, +1}, grid,
                     opt.perturb, "gamma=0");
    constraint_block(out, Sl2cFamily{Sl2cCase::II, 1.5, 0.2, 0.4, 0.0, 0.15, +1}, grid,
                     opt.perturb, "gamma=0.15");
}

void check_constraints_case_iii(Outcome& out, const VerifyOptions& opt) {
    Grid plus_branch(0.0, 10.0, 10001); // decaying exponential side
    constraint_block(out, Sl2cFamily{Sl2cCase::III, 2.0, 0.3, 1.0, 0.0, 0.0, +1}, plus_branch,
                     opt.perturb, "sign=+");
    Grid minus_branch(-10.0, 0.0, 10001);
    constraint_block(out, Sl2cFamily{Sl2cCase::III, 1.5, 0.0, 0.7, 0.0, 0.0, -1}, minus_branch,
                     opt.perturb, "sign=-");
}

void check_elliptic_ode_residual(Outcome& out, const VerifyOptions&) {
    auto residual = [](const EllipticParams& p, const Grid& grid) {
        auto data = invariants_from(p);
        double worst = 0.0;
        for (int i = 0; i < grid.n_points(); ++i) {
            const double z = grid[i];
            const double g = g_of_z(z, p, data);
            const double d = 2.0 * f_of_z(z, p, data) * g; // analytic g' = 2 f g
            const double rhs = g * ((4.0 / 3.0) * g * g * g - 4.0 * p.E_R * g + p.a);
            worst = std::max(worst, std::abs(d * d - rhs));
        }
        return worst;
    };
    auto p1 = fig1_params();
    auto d1 = invariants_from(p1);
    const double r1 = residual(p1, Grid::interior(0.0, 2.0 * d1.omega, 2001));
    const double r2 = residual(fig2_params(), Grid(0.05, 20.0, 2001));
    out.require(r1 < 1e-8, "nondegenerate residual " + fmt(r1));
    out.require(r2 < 1e-8, "degenerate residual " + fmt(r2));
}

void shape_block(Outcome& out, const Sl2cFamily& fam, const Grid& grid, const char* label) {
    const double r = shape_invariance_residual(fam, grid);
    out.require(r < 1e-10, std::string(label) + " " + fmt(r));
}

void check_shape_invariance_case_i(Outcome& out, const VerifyOptions&) {
    Grid grid(-7.0, 7.0, 1401);
    shape_block(out, Sl2cFamily{Sl2cCase::I, 2.0, 0.0, 1.0, 0.0, 0.0, +1}, grid, "m=2,b=i");
    shape_block(out, Sl2cFamily{Sl2cCase::I, 3.5, 0.5, 0.25, 0.3, 0.1, +1}, grid, "m=3.5");
    shape_block(out, Sl2cFamily{Sl2cCase::I, 1.5, 0.0, 2.0, -0.4, 0.0, +1}, grid, "m=1.5");
}

void check_shape_invariance_case_ii(Outcome& out, const VerifyOptions&) {
    Grid grid(0.5, 10.0, 1901);
    shape_block(out, Sl2cFamily{Sl2cCase::II, 3.0, 0.0, 0.5, 0.0, 0.0, +1}, grid, "m=3,b=i/2");
    shape_block(out, Sl2cFamily{Sl2cCase::II, 2.5, 0.3, 0.4, 0.0, 0.12, +1}, grid, "m=2.5");
    shape_block(out, Sl2cFamily{Sl2cCase::II, 4.0, 0.0, 1.0, 0.0, 0.0, +1}, grid, "m=4,b=i");
}

void check_shape_invariance_case_iii(Outcome& out, const VerifyOptions&) {
    Grid plus_branch(-4.0, 8.0, 1201);
    shape_block(out, Sl2cFamily{Sl2cCase::III, 2.5, 0.0, 2.0, 0.0, 0.0, +1}, plus_branch,
                "m=5/2,b=2i");
    shape_block(out, Sl2cFamily{Sl2cCase::III, 3.0, 0.0, 0.7, 0.0, 0.0, +1}, plus_branch,
                "m=3");
    Grid minus_branch(-8.0, 4.0, 1201);
    shape_block(out, Sl2cFamily{Sl2cCase::III, 2.0, 1.0, 1.0, 0.0, 0.0, -1}, minus_branch,
                "m=2,sign=-");
}

void check_spectrum_scarf_pair(Outcome& out, const VerifyOptions&) {
    const auto t0 = std::chrono::steady_clock::now();
    Grid grid(-12.0, 12.0, 4001);
    auto problem_for = [&grid](double m) {
        Sl2cFamily fam{Sl2cCase::I, m, 0.0, 0.5, 0.0, 0.0, +1};
        return SpectralProblem{potential_Vm_closed(fam, grid), BoundaryKind::dirichlet_both,
                               -3.0, -0.01, 240, 0.5};
    };
    auto full = find_spectrum(problem_for(2.0));
    out.require(full.eigenvalues.size() == 2,
                "m=2 levels found " + std::to_string(full.eigenvalues.size()));
    if (full.eigenvalues.size() == 2) {
        const double e0 = std::abs(full.eigenvalues[0].E + 2.25);
        const double e1 = std::abs(full.eigenvalues[1].E + 0.25);
        out.require(e0 < 1e-4, "E0 err " + fmt(e0));
        out.require(e1 < 1e-4, "E1 err " + fmt(e1));
    }
    auto partner = find_spectrum(problem_for(1.0));
    out.require(partner.eigenvalues.size() == 1,
                "m=1 levels found " + std::to_string(partner.eigenvalues.size()));
    if (partner.eigenvalues.size() == 1) {
        const double e = std::abs(partner.eigenvalues[0].E + 0.25);
        out.require(e < 1e-4, "partner E err " + fmt(e));
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.require(elapsed < 30.0, "runtime " + fmt(elapsed) + " s");
}

SampledFunction known_zero_mode(const EllipticParams& p, const WeierstrassData& data,
                                const Grid& grid) {
    auto gs = SampledFunction::sample_real(grid, [&](double z) { return g_of_z(z, p, data); });
    auto theta = trapezoid_cumulative(gs);
    auto psi = SampledFunction::zeros(grid);
    for (int i = 0; i < grid.n_points(); ++i) {
        psi.values[i] = std::sqrt(std::abs(gs.values[i].real())) *
                        std::exp(complex(0.0, theta.values[i].real()));
    }
    return psi;
}

void check_zero_mode_nondegenerate(Outcome& out, const VerifyOptions&) {
    auto p = fig1_params();
    auto data = invariants_from(p);
    Grid grid = Grid::interior(0.0, 2.0 * data.omega, 8000);
    auto pair = elliptic_pair(p, data, grid);
    auto psi = known_zero_mode(p, data, grid);

    auto v = SampledFunction::zeros(grid);
    for (int i = 0; i < grid.n_points(); ++i) {
        v.values[i] = complex(0.0, pair.v_minus_I.values[i].real());
    }
    const double residual = operator_residual(v, psi, p.E_R);
    out.require(residual < 1e-3, "operator residual " + fmt(residual));

    auto mod = zero_mode_modulus(p, data, grid);
    const double edge =
        std::max(std::abs(mod.values.front()), std::abs(mod.values.back())) / max_abs(mod);
    out.require(edge < 1e-3, "endpoint/max " + fmt(edge));
}

void check_zero_mode_degenerate(Outcome& out, const VerifyOptions&) {
    auto p = fig2_params();
    auto data = invariants_from(p);
    Grid grid(0.05, 25.0, 8000);
    auto pair = elliptic_pair(p, data, grid);
    auto psi = known_zero_mode(p, data, grid);

    auto v = SampledFunction::zeros(grid);
    for (int i = 0; i < grid.n_points(); ++i) {
        v.values[i] = complex(0.0, pair.v_minus_I.values[i].real());
    }
    const double residual = operator_residual(v, psi, p.E_R);
    out.require(residual < 1e-3, "operator residual " + fmt(residual));

    auto mod = zero_mode_modulus(p, data, grid);
    const double z_probe = 8.0 / std::sqrt(p.E_R);
    const int idx = static_cast<int>(std::lround((z_probe - grid.x_min()) / grid.spacing()));
    const double plateau = zero_mode_plateau(p);
    const double dev = std::abs(mod.values[idx].real() - plateau);
    out.require(dev < 1e-4 * std::max(1.0, plateau), "plateau deviation " + fmt(dev));
}

void intertwining_block(Outcome& out, const SuperpotentialSpec& w, double x_lo, double x_hi,
                        const double centers[3], double width) {
    for (int t = 0; t < 3; ++t) {
        const double mu = centers[t];
        auto make_res = [&](int n) {
            Grid grid(x_lo, x_hi, n);
            auto psi = SampledFunction::sample_real(grid, [mu, width](double x) {
                const double s = (x - mu) / width;
                return std::exp(-s * s);
            });
            return intertwining_residual(w, psi);
        };
        const double coarse = make_res(2001);
        const double fine = make_res(4001);
        out.require(coarse < 1e-3, "psi" + std::to_string(t) + " residual " + fmt(coarse));
        out.require(coarse / fine > 2.5,
                    "psi" + std::to_string(t) + " refinement ratio " + fmt(coarse / fine));
    }
}

void check_intertwining_case_i(Outcome& out, const VerifyOptions&) {
    auto w = bridge_superpotential(Sl2cFamily{Sl2cCase::I, 2.0, 0.0, 0.5, 0.0, 0.0, +1});
    const double centers[3] = {-1.0, 0.0, 1.5};
    intertwining_block(out, w, -8.0, 8.0, centers, 1.2);
}

void check_intertwining_case_ii(Outcome& out, const VerifyOptions&) {
    auto w = bridge_superpotential(Sl2cFamily{Sl2cCase::II, 2.5, 0.0, 0.5, 0.0, 0.0, +1});
    const double centers[3] = {4.0, 5.5, 7.0};
    intertwining_block(out, w, 1.5, 9.5, centers, 0.45);
}

void check_intertwining_case_iii(Outcome& out, const VerifyOptions&) {
    auto w = bridge_superpotential(Sl2cFamily{Sl2cCase::III, 2.0, 0.0, 1.0, 0.0, 0.0, +1});
    const double centers[3] = {1.0, 3.0, 5.0};
    intertwining_block(out, w, -2.0, 10.0, centers, 0.55);
}

void check_pt_classification(Outcome& out, const VerifyOptions&) {
    const double c = 0.3;
    Grid grid(c - 6.0, c + 6.0, 1200); // even count keeps x = c off the grid
    auto v_i = potential_Vm_closed(Sl2cFamily{Sl2cCase::I, 2.0, 0.0, 0.5, c, 0.0, +1}, grid);
    auto v_i_partner = potential_Vm_closed(Sl2cFamily{Sl2cCase::I, 1.0, 0.0, 0.5, c, 0.0, +1}, grid);
    out.require(pt_symmetry_check(v_i, c).symmetric, "case I V+ symmetric");
    out.require(pt_symmetry_check(v_i_partner, c).symmetric, "case I V- symmetric");

    auto v_ii = potential_Vm_closed(Sl2cFamily{Sl2cCase::II, 2.0, 0.0, 0.5, c, 0.0, +1}, grid);
    out.require(!pt_symmetry_check(v_ii, c).symmetric, "case II non-symmetric");

    Grid grid0(-6.0, 6.0, 1200);
    auto v_iii = potential_Vm_closed(Sl2cFamily{Sl2cCase::III, 2.0, 0.0, 0.5, 0.0, 0.0, +1}, grid0);
    out.require(!pt_symmetry_check(v_iii, 0.0).symmetric, "case III non-symmetric");

    auto p1 = fig1_params();
    auto d1 = invariants_from(p1);
    Grid egrid = Grid::interior(0.0, 2.0 * d1.omega, 3001);
    auto pair = elliptic_pair(p1, d1, egrid);
    out.require(pt_symmetry_check(pair.v_minus(), d1.omega).symmetric,
                "nondegenerate elliptic V- symmetric about omega");

    auto p2 = fig2_params();
    auto d2 = invariants_from(p2);
    Grid dgrid(0.05, 12.0, 2001);
    auto dpair = elliptic_pair(p2, d2, dgrid);
    const double mirror = 0.5 * (dgrid.x_min() + dgrid.x_max());
    out.require(!pt_symmetry_check(dpair.v_minus(), mirror).symmetric,
                "degenerate elliptic V- non-symmetric");
}

void check_elliptic_hplus_levels(Outcome& out, const VerifyOptions&) {
    auto p = fig1_params();
    auto data = invariants_from(p);
    auto levels_for = [&](double margin_fraction) {
        const double lo = margin_fraction * 2.0 * data.omega;
        const double hi = (1.0 - margin_fraction) * 2.0 * data.omega;
        Grid grid(lo, hi, 3001);
        auto v = SampledFunction::zeros(grid);
        for (int i = 0; i < grid.n_points(); ++i) {
            const double P = wp(grid[i], data) + p.E_R / 3.0;
            v.values[i] = 2.0 * P - p.a * p.a / (12.0 * P * P) - p.E_R;
        }
        SpectralProblem prob{v, BoundaryKind::dirichlet_both, 0.5, 60.0, 300, 0.5};
        return find_spectrum(prob);
    };
    auto narrow = levels_for(0.04);
    auto wide = levels_for(0.015);
    out.require(narrow.eigenvalues.size() >= 3,
                "levels (narrow box) " + std::to_string(narrow.eigenvalues.size()));
    out.require(wide.eigenvalues.size() >= 3,
                "levels (wide box) " + std::to_string(wide.eigenvalues.size()));
    const std::size_t n_cmp = std::min(narrow.eigenvalues.size(), wide.eigenvalues.size());
    bool monotone = n_cmp >= 3;
    for (std::size_t i = 0; i < n_cmp; ++i) {
        monotone = monotone && (wide.eigenvalues[i].E <= narrow.eigenvalues[i].E + 1e-9);
        out.require(narrow.eigenvalues[i].E > 0.0,
                    "E" + std::to_string(i) + " = " + fmt(narrow.eigenvalues[i].E));
    }
    out.require(monotone, "Dirichlet-box monotonicity");
}

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    std::vector<CheckResult> results;
    results.push_back(timed("fig1_invariants", options, check_fig1_invariants));
    results.push_back(timed("fig1_vplus_minimum", options, check_fig1_vplus_minimum));
    results.push_back(timed("fig1_origin_asymptotics", options, check_fig1_origin_asymptotics));
    results.push_back(timed("fig2_tail_asymptotics", options, check_fig2_tail_asymptotics));
    results.push_back(timed("constraints_case_i", options, check_constraints_case_i));
    results.push_back(timed("constraints_case_ii", options, check_constraints_case_ii));
    results.push_back(timed("constraints_case_iii", options, check_constraints_case_iii));
    results.push_back(timed("elliptic_ode_residual", options, check_elliptic_ode_residual));
    results.push_back(timed("shape_invariance_case_i", options, check_shape_invariance_case_i));
    results.push_back(timed("shape_invariance_case_ii", options, check_shape_invariance_case_ii));
    results.push_back(timed("shape_invariance_case_iii", options, check_shape_invariance_case_iii));
    results.push_back(timed("spectrum_scarf_pair", options, check_spectrum_scarf_pair));
    results.push_back(timed("zero_mode_nondegenerate", options, check_zero_mode_nondegenerate));
    results.push_back(timed("zero_mode_degenerate", options, check_zero_mode_degenerate));
    results.push_back(timed("intertwining_case_i", options, check_intertwining_case_i));
    results.push_back(timed("intertwining_case_ii", options, check_intertwining_case_ii));
    results.push_back(timed("intertwining_case_iii", options, check_intertwining_case_iii));
    results.push_back(timed("pt_classification", options, check_pt_classification));
    results.push_back(timed("elliptic_hplus_levels", options, check_elliptic_hplus_levels));
    return results;
}

} // namespace ptsusy
