#pragma once

#include <string>
#include <vector>

#include "ptsusy/grid.hpp"

namespace ptsusy {

enum class BoundaryKind { dirichlet_both, dirichlet_left_decay_right };

/// -psi'' + V psi = E psi on the potential's grid, solved by shooting from
/// both ends and matching at an interior point.
struct SpectralProblem {
    SampledFunction potential;
    BoundaryKind boundary = BoundaryKind::dirichlet_both;
    double e_lo = 0.0;
    double e_hi = 1.0;
    int scan_points = 400;
    double match_fraction = 0.5; // match point position within the domain
};

/// Wronskian-like mismatch psi_L psi'_R - psi_R psi'_L at the match point,
/// normalized by the phase-space magnitudes of the two solutions so it is
/// zero exactly when they are proportional.  Vanishes at eigenvalues of the
/// truncated Dirichlet problem.
complex shoot(const SpectralProblem& problem, double E);

struct EigenvalueHit {
    double E;
    double mismatch;
    int n_nodes_real_part;
};

struct SpectrumResult {
    std::vector<EigenvalueHit> eigenvalues; // sorted ascending
    std::string diagnostics;
};

/// Scans |shoot(E)| over the window, polishes each local minimum by
/// golden-section, and accepts eigenvalues with polished mismatch < 1e-5.
/// Deterministic; an empty result is not an error.
SpectrumResult find_spectrum(const SpectralProblem& problem);

/// ||(-D^2 + V - E) psi||_2 / ||psi||_2 over interior points, D^2 the central
/// second difference.
double operator_residual(const SampledFunction& potential, const SampledFunction& psi, double E);

} // namespace ptsusy
