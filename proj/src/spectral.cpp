#include "ptsusy/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ptsusy/errors.hpp"

namespace ptsusy {

namespace {

void validate(const SpectralProblem& p) {
    if (!(p.e_lo < p.e_hi)) throw std::invalid_argument("SpectralProblem: requires e_lo < e_hi");
    if (p.scan_points < 10) throw std::invalid_argument("SpectralProblem: requires scan_points >= 10");
    if (!(p.match_fraction > 0.0 && p.match_fraction < 1.0)) {
        throw std::invalid_argument("SpectralProblem: match_fraction must lie in (0, 1)");
    }
    p.potential.require_finite("SpectralProblem");
}

// Potential at interval midpoints x_{i+1/2} by 4-point Lagrange interpolation
// (O(h^4), so the RK4 order is preserved on sampled potentials).
std::vector<complex> midpoint_samples(const SampledFunction& v) {
    const int n = v.size();
    std::vector<complex> mid(static_cast<std::size_t>(n - 1));
    auto val = [&](int i) { return v.values[static_cast<std::size_t>(i)]; };
    for (int i = 0; i + 1 < n; ++i) {
        complex m;
        if (i == 0) {
            m = 0.3125 * val(0) + 0.9375 * val(1) - 0.3125 * val(2) + 0.0625 * val(3);
        } else if (i == n - 2) {
            m = 0.0625 * val(n - 4) - 0.3125 * val(n - 3) + 0.9375 * val(n - 2) + 0.3125 * val(n - 1);
        } else {
            m = (-val(i - 1) + 9.0 * (val(i) + val(i + 1)) - val(i + 2)) / 16.0;
        }
        mid[static_cast<std::size_t>(i)] = m;
    }
    return mid;
}

struct State {
    complex u; // psi
    complex v; // psi'
};

// One RK4 step of u' = v, v' = (V - E) u across interval i, in either
// direction.  q0/qm/q1 are (V - E) at the interval ends and midpoint.
State rk4_step(const State& y, double h, complex q0, complex qm, complex q1) {
    const complex k1u = y.v;
    const complex k1v = q0 * y.u;
    const complex u2 = y.u + 0.5 * h * k1u;
    const complex v2 = y.v + 0.5 * h * k1v;
    const complex k2u = v2;
    const complex k2v = qm * u2;
    const complex u3 = y.u + 0.5 * h * k2u;
    const complex v3 = y.v + 0.5 * h * k2v;
    const complex k3u = v3;
    const complex k3v = qm * u3;
    const complex u4 = y.u + h * k3u;
    const complex v4 = y.v + h * k3v;
    const complex k4u = v4;
    const complex k4v = q1 * u4;
    return State{y.u + (h / 6.0) * (k1u + 2.0 * k2u + 2.0 * k3u + k4u),
                 y.v + (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)};
}

void renormalize(State& y) {
    const double mag = std::max(std::abs(y.u), std::abs(y.v));
    if (mag > 1e50) {
        y.u /= mag;
        y.v /= mag;
    }
    if (!is_finite(y.u) || !is_finite(y.v)) {
        throw integration_overflow("shoot: state became non-finite", 0);
    }
}

struct ShootEngine {
    const SampledFunction& v;
    std::vector<complex> mid;
    int match;
    BoundaryKind boundary;

    ShootEngine(const SpectralProblem& p)
        : v(p.potential), mid(midpoint_samples(p.potential)), boundary(p.boundary) {
        const int n = v.size();
        match = static_cast<int>(std::lround(p.match_fraction * (n - 1)));
        match = std::clamp(match, 1, n - 2);
    }

    complex q(int i, double E) const { return v.values[static_cast<std::size_t>(i)] - E; }
    complex qmid(int i, double E) const { return mid[static_cast<std::size_t>(i)] - E; }

    // Left solution integrated up to `stop`; optionally records psi at every
    // visited grid point for node counting.
    State integrate_left(double E, int stop, std::vector<complex>* record = nullptr) const {
        const double h = v.grid.spacing();
        State y{complex(0.0), complex(h)};
        if (record) record->push_back(y.u);
        for (int i = 0; i < stop; ++i) {
            y = rk4_step(y, h, q(i, E), qmid(i, E), q(i + 1, E));
            if (i % 100 == 99) renormalize(y);
            if (!is_finite(y.u) || !is_finite(y.v)) {
                throw integration_overflow("shoot: non-finite state", static_cast<std::size_t>(i + 1));
            }
            if (record) record->push_back(y.u);
        }
        return y;
    }

    State integrate_right(double E) const {
        const int n = v.size();
        const double h = v.grid.spacing();
        State y{complex(0.0), complex(h)};
        if (boundary == BoundaryKind::dirichlet_left_decay_right) {
            // Start on the decaying branch: psi = 1, psi' = -kappa with
            // kappa^2 = V - E at the right edge.
            const complex kappa = std::sqrt(q(n - 1, E));
            y = State{complex(1.0), -kappa};
        }
        for (int i = n - 1; i > match; --i) {
            y = rk4_step(y, -h, q(i, E), qmid(i - 1, E), q(i - 1, E));
            if (i % 100 == 99) renormalize(y);
            if (!is_finite(y.u) || !is_finite(y.v)) {
                throw integration_overflow("shoot: non-finite state", static_cast<std::size_t>(i - 1));
            }
        }
        return y;
    }

    complex mismatch(double E) const {
        const State yl = integrate_left(E, match);
        const State yr = integrate_right(E);
        const complex w = yl.u * yr.v - yr.u * yl.v;
        // Normalize by the phase-space magnitudes of both solutions rather
        // than by max(|psi_L psi'_R|, |psi_R psi'_L|): the latter vanishes
        // together with the Wronskian when the match point falls on an
        // extremum of the eigenfunction (even states matched mid-domain) and
        // the ratio degenerates there.  The angle-like form below is zero
        // exactly when the two solutions are proportional.
        const double span = v.grid.x_max() - v.grid.x_min();
        const double k = std::max(std::sqrt(std::abs(q(match, E))), 1.0 / span);
        const double nl = std::hypot(std::abs(yl.u), std::abs(yl.v) / k);
        const double nr = std::hypot(std::abs(yr.u), std::abs(yr.v) / k);
        if (nl == 0.0 || nr == 0.0) return complex(0.0);
        return w / (k * nl * nr);
    }

    int count_nodes(double E) const {
        std::vector<complex> psi;
        psi.reserve(static_cast<std::size_t>(v.size()));
        integrate_left(E, v.size() - 1, &psi);
        int nodes = 0;
        double prev = 0.0;
        for (const complex& p : psi) {
            const double re = p.real();
            if (re == 0.0) continue;
            if (prev != 0.0 && re * prev < 0.0) ++nodes;
            prev = re;
        }
        return nodes;
    }
};

} // namespace

complex shoot(const SpectralProblem& problem, double E) {
    validate(problem);
    if (!(E >= problem.e_lo && E <= problem.e_hi)) {
        throw std::invalid_argument("shoot: E outside the energy window");
    }
    return ShootEngine(problem).mismatch(E);
}

SpectrumResult find_spectrum(const SpectralProblem& problem) {
    validate(problem);
    ShootEngine engine(problem);

    const int ns = problem.scan_points;
    std::vector<double> es(static_cast<std::size_t>(ns)), ms(static_cast<std::size_t>(ns));
    for (int i = 0; i < ns; ++i) {
        es[static_cast<std::size_t>(i)] =
            problem.e_lo + (problem.e_hi - problem.e_lo) * static_cast<double>(i) / (ns - 1);
        ms[static_cast<std::size_t>(i)] = std::abs(engine.mismatch(es[static_cast<std::size_t>(i)]));
    }

    SpectrumResult result;
    int n_minima = 0;
    constexpr double kAccept = 1e-5;
    constexpr double kGolden = 0.61803398874989484820;

    for (int i = 1; i + 1 < ns; ++i) {
        const std::size_t j = static_cast<std::size_t>(i);
        if (!(ms[j] <= ms[j - 1] && ms[j] <= ms[j + 1])) continue;
        ++n_minima;

        double a = es[j - 1], b = es[j + 1];
        double best_e = es[j], best_m = ms[j];
        auto eval = [&](double e) {
            const double m = std::abs(engine.mismatch(e));
            if (m < best_m) {
                best_m = m;
                best_e = e;
            }
            return m;
        };
        double x1 = b - kGolden * (b - a);
        double x2 = a + kGolden * (b - a);
        double f1 = eval(x1);
        double f2 = eval(x2);
        for (int it = 0; it < 120; ++it) {
            if ((b - a) < 1e-12 * std::max(1.0, std::abs(a))) break;
            if (f1 < f2) {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - kGolden * (b - a);
                f1 = eval(x1);
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + kGolden * (b - a);
                f2 = eval(x2);
            }
        }
        if (best_m < kAccept) {
            result.eigenvalues.push_back(EigenvalueHit{best_e, best_m, engine.count_nodes(best_e)});
        }
    }

    // Merge duplicates from adjacent scan minima.
    std::sort(result.eigenvalues.begin(), result.eigenvalues.end(),
              [](const EigenvalueHit& l, const EigenvalueHit& r) { return l.E < r.E; });
    std::vector<EigenvalueHit> unique;
    for (const auto& hit : result.eigenvalues) {
        if (!unique.empty() && std::abs(hit.E - unique.back().E) < 1e-8 * std::max(1.0, std::abs(hit.E))) {
            if (hit.mismatch < unique.back().mismatch) unique.back() = hit;
        } else {
            unique.push_back(hit);
        }
    }
    result.eigenvalues = std::move(unique);

    std::ostringstream diag;
    diag << "scanned " << ns << " energies in [" << problem.e_lo << ", " << problem.e_hi << "]; "
         << n_minima << " local minima; " << result.eigenvalues.size() << " accepted";
    result.diagnostics = diag.str();
    return result;
}

double operator_residual(const SampledFunction& potential, const SampledFunction& psi, double E) {
    if (!(potential.grid == psi.grid)) {
        throw std::invalid_argument("operator_residual: grid mismatch");
    }
    const int n = psi.size();
    if (n < 3) throw std::invalid_argument("operator_residual: needs at least 3 points");
    const double h = psi.grid.spacing();
    double num = 0.0, den = 0.0;
    for (int i = 1; i + 1 < n; ++i) {
        const std::size_t j = static_cast<std::size_t>(i);
        const complex dd = (psi.values[j + 1] - 2.0 * psi.values[j] + psi.values[j - 1]) / (h * h);
        const complex r = -dd + (potential.values[j] - E) * psi.values[j];
        num += std::norm(r);
        den += std::norm(psi.values[j]);
    }
    if (den == 0.0) throw std::invalid_argument("operator_residual: psi vanishes on the interior");
    return std::sqrt(num / den);
}

} // namespace ptsusy
