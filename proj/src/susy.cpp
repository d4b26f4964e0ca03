#include "ptsusy/susy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ptsusy/numerics.hpp"

namespace ptsusy {

namespace {

SampledFunction combine(const SampledFunction& re, const SampledFunction& im) {
    std::vector<complex> v(re.values.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = complex(re.values[i].real(), im.values[i].real());
    }
    return SampledFunction(re.grid, std::move(v));
}

// Sampled values and derivative of a ScalarField on a grid; analytic
// derivative when present, second-order differences otherwise.
void field_with_derivative(const ScalarField& field, const Grid& grid,
                           std::vector<double>& vals, std::vector<double>& derivs) {
    const int n = grid.n_points();
    vals.resize(static_cast<std::size_t>(n));
    derivs.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vals[static_cast<std::size_t>(i)] = field.value(grid[i]);
    if (field.has_derivative()) {
        for (int i = 0; i < n; ++i) derivs[static_cast<std::size_t>(i)] = field.derivative(grid[i]);
    } else {
        SampledFunction s(grid, std::vector<complex>(vals.begin(), vals.end()));
        auto d = central_derivative(s, 1);
        for (int i = 0; i < n; ++i) derivs[static_cast<std::size_t>(i)] = d.values[static_cast<std::size_t>(i)].real();
    }
}

} // namespace

SampledFunction PartnerPair::v_plus() const { return combine(v_plus_R, v_plus_I); }
SampledFunction PartnerPair::v_minus() const { return combine(v_minus_R, v_minus_I); }

PartnerPair partner_potentials(const SuperpotentialSpec& w, const Grid& grid,
                               bool allow_singular_endpoints) {
    const int n = grid.n_points();
    std::vector<double> f, fp, g, gp;
    field_with_derivative(w.f, grid, f, fp);
    field_with_derivative(w.g, grid, g, gp);

    std::vector<complex> vpR(static_cast<std::size_t>(n)), vpI(static_cast<std::size_t>(n));
    std::vector<complex> vmR(static_cast<std::size_t>(n)), vmI(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
        const double fg = f[i] * f[i] - g[i] * g[i];
        const double cross = 2.0 * f[i] * g[i];
        vpR[i] = (fg - fp[i]) + w.E_R;
        vmR[i] = (fg + fp[i]) + w.E_R;
        vpI[i] = (cross - gp[i]) + w.E_I;
        vmI[i] = (cross + gp[i]) + w.E_I;
    }

    PartnerPair pair{SampledFunction(grid, std::move(vpR)), SampledFunction(grid, std::move(vpI)),
                     SampledFunction(grid, std::move(vmR)), SampledFunction(grid, std::move(vmI))};
    pair.v_plus_R.singular_endpoints = allow_singular_endpoints;
    pair.v_plus_I.singular_endpoints = allow_singular_endpoints;
    pair.v_minus_R.singular_endpoints = allow_singular_endpoints;
    pair.v_minus_I.singular_endpoints = allow_singular_endpoints;
    pair.v_plus_R.require_finite("partner_potentials");
    pair.v_plus_I.require_finite("partner_potentials");
    pair.v_minus_R.require_finite("partner_potentials");
    pair.v_minus_I.require_finite("partner_potentials");
    return pair;
}

namespace {

SampledFunction apply_first_order(const SuperpotentialSpec& w, const SampledFunction& psi, double sign) {
    auto d = central_derivative(psi, 1);
    std::vector<complex> out(psi.values.size());
    for (int i = 0; i < psi.size(); ++i) {
        const std::size_t j = static_cast<std::size_t>(i);
        out[j] = sign * d.values[j] + w.W(psi.grid[i]) * psi.values[j];
    }
    return SampledFunction(psi.grid, std::move(out));
}

} // namespace

SampledFunction apply_A(const SuperpotentialSpec& w, const SampledFunction& psi) {
    return apply_first_order(w, psi, +1.0);
}

SampledFunction apply_A_dagger(const SuperpotentialSpec& w, const SampledFunction& psi) {
    return apply_first_order(w, psi, -1.0);
}

namespace {

// H psi = -psi'' + (V - E) psi with V given as complex samples.
SampledFunction apply_hamiltonian(const SampledFunction& v, complex energy, const SampledFunction& psi) {
    auto dd = central_derivative(psi, 2);
    std::vector<complex> out(psi.values.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = -dd.values[i] + (v.values[i] - energy) * psi.values[i];
    }
    return SampledFunction(psi.grid, std::move(out));
}

} // namespace

double intertwining_residual(const SuperpotentialSpec& w, const SampledFunction& psi) {
    auto pair = partner_potentials(w, psi.grid);
    auto v_plus = pair.v_plus();
    auto v_minus = pair.v_minus();
    const complex e = w.energy();

    auto h_plus_psi = apply_hamiltonian(v_plus, e, psi);
    auto lhs = apply_A(w, h_plus_psi);
    auto rhs = apply_hamiltonian(v_minus, e, apply_A(w, psi));

    const double denom = l2_norm(psi);
    if (denom == 0.0) throw std::invalid_argument("intertwining_residual: psi is identically zero");
    return l2_norm(difference(lhs, rhs)) / denom;
}

ZeroMode zero_mode(const SuperpotentialSpec& w, const Grid& grid, Sector sector) {
    if (sector == Sector::neither) {
        throw std::invalid_argument("zero_mode: sector must be plus or minus");
    }
    auto wsamp = SampledFunction::sample(grid, [&w](double x) { return w.W(x); });
    wsamp.require_finite("zero_mode");
    auto integral = trapezoid_cumulative(wsamp);

    const double sign = (sector == Sector::plus) ? -1.0 : +1.0;
    const int n = grid.n_points();
    std::vector<complex> psi(static_cast<std::size_t>(n));
    // Shift the exponent by its running real maximum scale to avoid overflow;
    // the constant K is arbitrary until normalization.
    double re_max = 0.0;
    for (int i = 0; i < n; ++i) {
        re_max = std::max(re_max, sign * integral.values[static_cast<std::size_t>(i)].real());
    }
    for (int i = 0; i < n; ++i) {
        psi[static_cast<std::size_t>(i)] =
            std::exp(sign * integral.values[static_cast<std::size_t>(i)] - re_max);
    }
    SampledFunction mode(grid, std::move(psi));
    mode.require_finite("zero_mode");

    const double peak = max_abs(mode);
    if (peak == 0.0) throw std::domain_error("zero_mode: underflowed to zero");
    const double edge = std::max(std::abs(mode.values.front()), std::abs(mode.values.back()));
    const bool normalizable = edge <= 1e-2 * peak;

    double scale;
    if (normalizable) {
        auto sq = SampledFunction::zeros(grid);
        for (int i = 0; i < n; ++i) {
            sq.values[static_cast<std::size_t>(i)] = std::norm(mode.values[static_cast<std::size_t>(i)]);
        }
        scale = 1.0 / std::sqrt(trapezoid_total(sq).real());
    } else {
        scale = 1.0 / peak;
    }

    complex phase(1.0, 0.0);
    const complex mid = mode.values[static_cast<std::size_t>((n - 1) / 2)];
    if (std::abs(mid) > 0.0) phase = std::conj(mid) / std::abs(mid);
    for (auto& v : mode.values) v *= scale * phase;
    return ZeroMode{std::move(mode), normalizable};
}

Sector sector_selector(const SuperpotentialSpec& w, const Grid& grid) {
    auto wsamp = SampledFunction::sample(grid, [&w](double x) { return w.W(x); });
    wsamp.require_finite("sector_selector");
    auto integral = trapezoid_cumulative(wsamp);
    const int n = grid.n_points();

    auto classifies = [&](double sign) {
        // sign = +1 tests the plus sector: phi = +Re int W must dip in the
        // interior and rise toward both ends.
        double min_v = sign * integral.values[0].real();
        int arg_min = 0;
        double max_v = min_v;
        for (int i = 1; i < n; ++i) {
            const double v = sign * integral.values[static_cast<std::size_t>(i)].real();
            if (v < min_v) {
                min_v = v;
                arg_min = i;
            }
            max_v = std::max(max_v, v);
        }
        const double tol = 1e-9 * std::max(1.0, max_v - min_v);
        const double left = sign * integral.values[0].real();
        const double right = sign * integral.values[static_cast<std::size_t>(n - 1)].real();
        return arg_min > 0 && arg_min < n - 1 && left > min_v + tol && right > min_v + tol;
    };

    if (classifies(+1.0)) return Sector::plus;
    if (classifies(-1.0)) return Sector::minus;
    return Sector::neither;
}

PtCheck pt_symmetry_check(const SampledFunction& v, double mirror) {
    const Grid& g = v.grid;
    const double center = 0.5 * (g.x_min() + g.x_max());
    if (std::abs(center - mirror) > 1e-9 * std::max(1.0, std::abs(mirror))) {
        throw std::invalid_argument("pt_symmetry_check: grid is not symmetric about the mirror point");
    }
    const int n = g.n_points();
    double violation = 0.0;
    for (int i = 0; i < n; ++i) {
        const complex a = v.values[static_cast<std::size_t>(i)];
        const complex b = v.values[static_cast<std::size_t>(n - 1 - i)];
        violation = std::max(violation, std::abs(a - std::conj(b)));
    }
    const double threshold = 1e-9 * max_abs(v);
    return PtCheck{violation, threshold, violation < threshold};
}

} // namespace ptsusy
