#include "ptsusy/sl2c.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ptsusy/numerics.hpp"

namespace ptsusy {

void validate(const Sl2cFamily& family) {
    const double quarter_pi = 0.25 * std::numbers::pi;
    if (!(family.gamma >= -quarter_pi && family.gamma < quarter_pi)) {
        throw std::invalid_argument("Sl2cFamily: gamma must lie in [-pi/4, pi/4)");
    }
    if (family.sign != 1 && family.sign != -1) {
        throw std::invalid_argument("Sl2cFamily: sign must be +1 or -1");
    }
    if (!std::isfinite(family.m) || !std::isfinite(family.b_R) || !std::isfinite(family.b_I) ||
        !std::isfinite(family.c)) {
        throw std::invalid_argument("Sl2cFamily: parameters must be finite");
    }
}

std::pair<complex, complex> eval_F_G(const Sl2cFamily& family, double x) {
    validate(family);
    complex F, G;
    switch (family.case_tag) {
        case Sl2cCase::I: {
            const complex u(x - family.c, -family.gamma);
            const complex ch = std::cosh(u);
            F = std::sinh(u) / ch;
            G = family.b() / ch;
            break;
        }
        case Sl2cCase::II: {
            if (family.gamma == 0.0 && x == family.c) {
                throw std::domain_error("eval_F_G: case II is singular at x = " +
                                        std::to_string(x) + " (x = c with gamma = 0)");
            }
            const complex u(x - family.c, -family.gamma);
            const complex sh = std::sinh(u);
            F = std::cosh(u) / sh;
            G = family.b() / sh;
            break;
        }
        case Sl2cCase::III: {
            const double s = static_cast<double>(family.sign);
            F = complex(s, 0.0);
            G = family.b() * std::exp(-s * x);
            break;
        }
    }
    if (!is_finite(F) || !is_finite(G)) {
        throw std::domain_error("eval_F_G: non-finite value at x = " + std::to_string(x));
    }
    return {F, G};
}

std::pair<complex, complex> eval_F_G_derivatives(const Sl2cFamily& family, double x) {
    auto [F, G] = eval_F_G(family, x);
    return {1.0 - F * F, -F * G};
}

std::pair<double, double> constraint_residual(const Sl2cFamily& family, const Grid& grid,
                                              double perturb_F) {
    const int n = grid.n_points();
    std::vector<complex> fv(static_cast<std::size_t>(n)), gv(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto [F, G] = eval_F_G(family, grid[i]);
        fv[static_cast<std::size_t>(i)] = F + perturb_F;
        gv[static_cast<std::size_t>(i)] = G;
    }
    SampledFunction Fs(grid, std::move(fv));
    SampledFunction Gs(grid, std::move(gv));
    auto Fp = central_derivative(Fs, 1);
    auto Gp = central_derivative(Gs, 1);

    double rF = 0.0, rG = 0.0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
        rF = std::max(rF, std::abs(Fp.values[i] - (1.0 - Fs.values[i] * Fs.values[i])));
        rG = std::max(rG, std::abs(Gp.values[i] + Fs.values[i] * Gs.values[i]));
    }
    return {rF, rG};
}

SampledFunction potential_Vm(const Sl2cFamily& family, const Grid& grid) {
    const double m = family.m;
    const double coeff = (m - 0.5) * (m + 0.5);
    auto v = SampledFunction::sample(grid, [&](double x) {
        auto [F, G] = eval_F_G(family, x);
        return -coeff * (1.0 - F * F) - 2.0 * m * F * G + G * G;
    });
    v.require_finite("potential_Vm");
    return v;
}

SampledFunction potential_Vm_closed(const Sl2cFamily& family, const Grid& grid) {
    validate(family);
    const double m = family.m;
    const complex b = family.b();
    SampledFunction v = SampledFunction::zeros(grid);
    switch (family.case_tag) {
        case Sl2cCase::I:
            for (int i = 0; i < grid.n_points(); ++i) {
                const complex u(grid[i] - family.c, -family.gamma);
                const complex sech = 1.0 / std::cosh(u);
                const complex tanh = std::tanh(u);
                v.values[static_cast<std::size_t>(i)] =
                    (b * b - m * m + 0.25) * sech * sech - 2.0 * m * b * sech * tanh;
            }
            break;
        case Sl2cCase::II:
            for (int i = 0; i < grid.n_points(); ++i) {
                if (family.gamma == 0.0 && grid[i] == family.c) {
                    throw std::domain_error("potential_Vm_closed: case II singular at x = c");
                }
                const complex u(grid[i] - family.c, -family.gamma);
                const complex csch = 1.0 / std::sinh(u);
                const complex coth = std::cosh(u) * csch;
                v.values[static_cast<std::size_t>(i)] =
                    (b * b + m * m - 0.25) * csch * csch - 2.0 * m * b * csch * coth;
            }
            break;
        case Sl2cCase::III: {
            const double s = static_cast<double>(family.sign);
            for (int i = 0; i < grid.n_points(); ++i) {
                const double e1 = std::exp(-s * grid[i]);
                v.values[static_cast<std::size_t>(i)] = b * b * e1 * e1 - s * 2.0 * m * b * e1;
            }
            break;
        }
    }
    v.require_finite("potential_Vm_closed");
    return v;
}

FamilySpectrum family_spectrum(double m) {
    FamilySpectrum spec;
    spec.m = m;
    for (int n = 0; m - n - 0.5 > 0.0; ++n) {
        const double k = m - n - 0.5;
        spec.levels.emplace_back(n, -k * k);
    }
    return spec;
}

SuperpotentialSpec bridge_superpotential(const Sl2cFamily& family) {
    validate(family);
    const double mh = family.m - 0.5;
    auto W = [family, mh](double x) {
        auto [F, G] = eval_F_G(family, x);
        return mh * F - G;
    };
    auto Wp = [family, mh](double x) {
        auto [F, G] = eval_F_G(family, x);
        return mh * (1.0 - F * F) + F * G;
    };
    SuperpotentialSpec spec;
    spec.f = ScalarField{[W](double x) { return W(x).real(); },
                         [Wp](double x) { return Wp(x).real(); }};
    spec.g = ScalarField{[W](double x) { return W(x).imag(); },
                         [Wp](double x) { return Wp(x).imag(); }};
    spec.E_R = -mh * mh;
    spec.E_I = 0.0;
    return spec;
}

double shape_invariance_residual(const Sl2cFamily& family, const Grid& grid) {
    const double mh = family.m - 0.5;
    const double e_r = -mh * mh;
    auto v_minus = SampledFunction::sample(grid, [&](double x) {
        auto [F, G] = eval_F_G(family, x);
        const complex W = mh * F - G;
        const complex Wp = mh * (1.0 - F * F) + F * G;
        return W * W + Wp + e_r;
    });
    auto v_partner = potential_Vm_closed(family.with_m(family.m - 1.0), grid);
    return max_abs_difference(v_minus, v_partner);
}

} // namespace ptsusy
