#pragma once

#include <functional>
#include <optional>

#include "ptsusy/grid.hpp"

namespace ptsusy {

/// Real-valued map with an optional analytic first derivative.  When the
/// derivative is absent, consumers fall back to central differences.
struct ScalarField {
    std::function<double(double)> value;
    std::function<double(double)> derivative; // may be empty

    bool has_derivative() const { return static_cast<bool>(derivative); }
};

/// W = f + i g together with the factorization energy E = E_R + i E_I.
/// E_I stays 0 in the real-spectrum regime.
struct SuperpotentialSpec {
    ScalarField f;
    ScalarField g;
    double E_R = 0.0;
    double E_I = 0.0;

    complex W(double x) const { return complex(f.value(x), g.value(x)); }
    complex energy() const { return complex(E_R, E_I); }
};

/// The four real components of the partner potentials
/// V(+-) = W^2 -+ W' + E split into real and imaginary parts.
struct PartnerPair {
    SampledFunction v_plus_R;
    SampledFunction v_plus_I;
    SampledFunction v_minus_R;
    SampledFunction v_minus_I;

    SampledFunction v_plus() const;
    SampledFunction v_minus() const;
};

/// V(+-)_R = f^2 - g^2 -+ f' + E_R,  V(+-)_I = 2 f g -+ g' + E_I.
/// Analytic derivatives are used when the spec carries them; otherwise f and g
/// are sampled and differentiated by central differences.  Non-finite samples
/// raise std::domain_error unless allowed at the endpoints.
PartnerPair partner_potentials(const SuperpotentialSpec& w, const Grid& grid,
                               bool allow_singular_endpoints = false);

/// (d/dx + W) psi and (-d/dx + W) psi via second-order differences.
SampledFunction apply_A(const SuperpotentialSpec& w, const SampledFunction& psi);
SampledFunction apply_A_dagger(const SuperpotentialSpec& w, const SampledFunction& psi);

/// ||(A H_+ - H_- A) psi||_2 / ||psi||_2 with H(+-) = -d^2/dx^2 + V(+-) - E.
/// O(h^2) for smooth data; identically zero in exact arithmetic.
double intertwining_residual(const SuperpotentialSpec& w, const SampledFunction& psi);

enum class Sector { plus, minus, neither };

struct ZeroMode {
    SampledFunction psi;
    bool normalizable; // false -> psi is max-modulus normalized instead of L2
};

/// Ground state exp(-int W) (plus sector) or exp(+int W) (minus sector),
/// L2-normalized when the mode decays at both grid ends, otherwise flagged
/// and max-modulus normalized.  The phase is fixed so the midpoint sample is
/// real-positive when nonzero.
ZeroMode zero_mode(const SuperpotentialSpec& w, const Grid& grid, Sector sector);

/// Decides which of exp(-+ int W) is normalizable by comparing Re int W at
/// the grid ends against its interior minimum.
Sector sector_selector(const SuperpotentialSpec& w, const Grid& grid);

struct PtCheck {
    double violation; // max |V(x0+s) - conj(V(x0-s))|
    double threshold; // 1e-9 * max |V|
    bool symmetric;
};

/// PT symmetry about a mirror point: V(x0+s) = conj(V(x0-s)).  The sampling
/// grid must be symmetric about x0.
PtCheck pt_symmetry_check(const SampledFunction& v, double mirror);

} // namespace ptsusy
