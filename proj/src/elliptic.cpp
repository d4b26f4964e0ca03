#include "ptsusy/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ptsusy/errors.hpp"

namespace ptsusy {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double agm(double a, double b) {
    for (int i = 0; i < 64 && std::abs(a - b) > kEps * a; ++i) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return 0.5 * (a + b);
}

double cubic_poly(double g2, double g3, double p) {
    return (4.0 * p * p - g2) * p - g3;
}

} // namespace

double complete_elliptic_K(double k) {
    if (!(k >= 0.0 && k < 1.0)) {
        throw std::domain_error("complete_elliptic_K: modulus must satisfy 0 <= k < 1");
    }
    return 0.5 * std::numbers::pi / agm(1.0, std::sqrt((1.0 - k) * (1.0 + k)));
}

JacobiSnCnDn jacobi_elliptic(double u, double k) {
    if (!(k >= 0.0 && k < 1.0)) {
        throw std::domain_error("jacobi_elliptic: modulus must satisfy 0 <= k < 1");
    }
    if (k < 1e-14) {
        return {std::sin(u), std::cos(u), 1.0};
    }
    // Descending AGM scale (A&S 16.4), then the backward phi recursion.
    double a[64], c[64];
    a[0] = 1.0;
    c[0] = k;
    double b = std::sqrt((1.0 - k) * (1.0 + k));
    int n = 0;
    while (c[n] > kEps * a[n] && n < 62) {
        ++n;
        a[n] = 0.5 * (a[n - 1] + b);
        c[n] = 0.5 * (a[n - 1] - b);
        b = std::sqrt(a[n - 1] * b);
    }
    double phi = std::ldexp(a[n] * u, n);
    double phi_prev = phi; // phi_{1} by the time the loop ends
    for (int i = n; i >= 1; --i) {
        const double s = std::clamp(c[i] / a[i] * std::sin(phi), -1.0, 1.0);
        phi_prev = phi;
        phi = 0.5 * (phi + std::asin(s));
    }
    const double sn = std::sin(phi);
    const double cn = std::cos(phi);
    const double dn = (n == 0) ? 1.0 : cn / std::cos(phi_prev - phi);
    return {sn, cn, dn};
}

WeierstrassData invariants_from(const EllipticParams& params) {
    if (!std::isfinite(params.E_R) || !std::isfinite(params.a)) {
        throw std::invalid_argument("invariants_from: parameters must be finite");
    }
    if (params.a == 0.0) {
        throw std::invalid_argument("invariants_from: the integration constant a must be nonzero");
    }
    WeierstrassData data;
    const double er = params.E_R;
    data.g2 = (4.0 / 3.0) * er * er;
    data.g3 = (8.0 / 27.0) * er * er * er - params.a * params.a / 12.0;
    data.D = data.g2 * data.g2 * data.g2 - 27.0 * data.g3 * data.g3;

    const double band = 1e-10 * std::max(1.0, data.g2 * data.g2 * data.g2);
    if (std::abs(data.D) < band && er > 0.0) {
        data.regime = WRegime::degenerate;
        const double p = er / 3.0;
        data.roots = CubicRoots{complex(p), complex(p), complex(-2.0 * p), true};
        data.omega = std::numeric_limits<double>::infinity();
    } else if (data.D > 0.0) {
        data.regime = WRegime::nondegenerate_positive;
        data.roots = solve_depressed_cubic(data.g2, data.g3);
        const double e1 = data.roots.e1.real();
        const double e2 = data.roots.e2.real();
        const double e3 = data.roots.e3.real();
        // K from the complementary modulus k'^2 = (e1 - e2)/(e1 - e3), which
        // stays accurate for nearly equal leading roots.
        const double kp = std::sqrt((e1 - e2) / (e1 - e3));
        const double K = 0.5 * std::numbers::pi / agm(1.0, kp);
        data.omega = K / std::sqrt(e1 - e3);
    } else {
        data.regime = WRegime::nondegenerate_negative;
        data.roots = solve_depressed_cubic(data.g2, data.g3);
        data.omega = std::numeric_limits<double>::quiet_NaN();
    }
    return data;
}

double wp_from_roots(double z, const CubicRoots& roots) {
    const double e1 = roots.e1.real();
    const double e2 = roots.e2.real();
    const double e3 = roots.e3.real();
    const double s = std::sqrt(e1 - e3);
    const double k = std::sqrt((e2 - e3) / (e1 - e3));
    const double sn = jacobi_elliptic(z * s, std::min(k, 1.0 - kEps)).sn;
    return e3 + (e1 - e3) / (sn * sn);
}

double wp_degenerate(double z, double E_R) {
    const double y = std::sqrt(E_R) * z;
    const double csch = 1.0 / std::sinh(y);
    return E_R * (1.0 / 3.0 + csch * csch);
}

namespace {

void check_domain(double z, const WeierstrassData& data, const char* who) {
    if (data.regime == WRegime::nondegenerate_negative) {
        throw unsupported_regime(std::string(who) +
                                 ": potentials are not evaluated for D < 0");
    }
    if (data.regime == WRegime::degenerate) {
        if (!(z > 0.0)) throw std::domain_error(std::string(who) + ": requires z > 0");
    } else {
        if (!(z > 0.0 && z < 2.0 * data.omega)) {
            throw std::domain_error(std::string(who) + ": requires 0 < z < 2*omega");
        }
    }
}

} // namespace

double wp(double z, const WeierstrassData& data) {
    check_domain(z, data, "wp");
    if (data.regime == WRegime::degenerate) {
        return wp_degenerate(z, 3.0 * data.roots.e1.real());
    }
    return wp_from_roots(z, data.roots);
}

double wp_prime(double z, const WeierstrassData& data) {
    check_domain(z, data, "wp_prime");
    if (data.regime == WRegime::degenerate) {
        const double er = 3.0 * data.roots.e1.real();
        const double y = std::sqrt(er) * z;
        const double csch = 1.0 / std::sinh(y);
        const double coth = std::cosh(y) * csch;
        return -2.0 * er * std::sqrt(er) * csch * csch * coth;
    }
    if (std::abs(z - data.omega) < 1e-12 * std::max(1.0, data.omega)) {
        return 0.0; // wp'(omega) = 0 exactly
    }
    const double p = wp_from_roots(z, data.roots);
    const double q = std::max(0.0, cubic_poly(data.g2, data.g3, p));
    const double mag = std::sqrt(q);
    return (z < data.omega) ? -mag : mag;
}

namespace {

double shifted_wp(double z, const EllipticParams& params, const WeierstrassData& data,
                  const char* who) {
    const double denom = wp(z, data) + params.E_R / 3.0;
    if (!(std::abs(denom) > 0.0) || !std::isfinite(denom)) {
        throw std::domain_error(std::string(who) + ": wp(z) + E_R/3 vanishes");
    }
    return denom;
}

} // namespace

double g_of_z(double z, const EllipticParams& params, const WeierstrassData& data) {
    return 0.25 * params.a / shifted_wp(z, params, data, "g_of_z");
}

double f_of_z(double z, const EllipticParams& params, const WeierstrassData& data) {
    return -0.5 * wp_prime(z, data) / shifted_wp(z, params, data, "f_of_z");
}

SuperpotentialSpec elliptic_superpotential(const EllipticParams& params,
                                           const WeierstrassData& data) {
    SuperpotentialSpec spec;
    spec.f =
        ScalarField{[params, data](double z) { return f_of_z(z, params, data); },
                    [params, data](double z) {
                        const double p = wp(z, data);
                        const double pp = wp_prime(z, data);
                        const double ppp = 6.0 * p * p - 0.5 * data.g2; // wp''
                        const double P = p + params.E_R / 3.0;
                        return -0.5 * (ppp * P - pp * pp) / (P * P);
                    }};
    spec.g =
        ScalarField{[params, data](double z) { return g_of_z(z, params, data); },
                    [params, data](double z) {
                        const double P = wp(z, data) + params.E_R / 3.0;
                        return -0.25 * params.a * wp_prime(z, data) / (P * P);
                    }};
    spec.E_R = params.E_R;
    spec.E_I = 0.0;
    return spec;
}

PartnerPair elliptic_pair(const EllipticParams& params, const WeierstrassData& data,
                          const Grid& grid) {
    check_domain(grid.x_min(), data, "elliptic_pair");
    check_domain(grid.x_max(), data, "elliptic_pair");

    const int n = grid.n_points();
    auto v_plus_R = SampledFunction::zeros(grid);
    auto v_minus_I = SampledFunction::zeros(grid);

    if (data.regime == WRegime::degenerate) {
        const double er = params.E_R;
        const double sgn = (params.a >= 0.0) ? 1.0 : -1.0;
        for (int i = 0; i < n; ++i) {
            const double y = std::sqrt(er) * grid[i];
            const double csch = 1.0 / std::sinh(y);
            const double c2 = csch * csch;
            const double w = 1.0 + 1.5 * c2;
            v_plus_R.values[static_cast<std::size_t>(i)] =
                (4.0 / 3.0) * er * (w - 1.0 / (w * w));
            v_minus_I.values[static_cast<std::size_t>(i)] =
                sgn * 6.0 * er * c2 * (std::cosh(y) * csch) / (w * w);
        }
    } else {
        for (int i = 0; i < n; ++i) {
            const double P = shifted_wp(grid[i], params, data, "elliptic_pair");
            v_plus_R.values[static_cast<std::size_t>(i)] =
                2.0 * P - params.a * params.a / (12.0 * P * P);
            v_minus_I.values[static_cast<std::size_t>(i)] =
                -0.5 * params.a * wp_prime(grid[i], data) / (P * P);
        }
    }
    v_plus_R.require_finite("elliptic_pair");
    v_minus_I.require_finite("elliptic_pair");
    return PartnerPair{std::move(v_plus_R), SampledFunction::zeros(grid),
                       SampledFunction::zeros(grid), std::move(v_minus_I)};
}

SampledFunction zero_mode_modulus(const EllipticParams& params, const WeierstrassData& data,
                                  const Grid& grid) {
    check_domain(grid.x_min(), data, "zero_mode_modulus");
    check_domain(grid.x_max(), data, "zero_mode_modulus");
    const double amp = 0.5 * std::sqrt(std::abs(params.a));
    auto mod = SampledFunction::sample_real(grid, [&](double z) {
        return amp / std::sqrt(wp(z, data) + params.E_R / 3.0);
    });
    mod.require_finite("zero_mode_modulus");
    if (data.regime == WRegime::nondegenerate_positive) {
        const double peak = max_abs(mod);
        for (auto& v : mod.values) v /= peak;
    }
    return mod;
}

double zero_mode_plateau(const EllipticParams& params) {
    if (!(params.E_R > 0.0)) {
        throw std::domain_error("zero_mode_plateau: requires E_R > 0");
    }
    return 0.5 * std::sqrt(1.5 * std::abs(params.a) / params.E_R);
}

} // namespace ptsusy
