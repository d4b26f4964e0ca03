#pragma once

#include <utility>
#include <vector>

#include "ptsusy/grid.hpp"
#include "ptsusy/susy.hpp"

namespace ptsusy {

enum class Sl2cCase { I, II, III };

/// One member of the three solution families
///   I:   F = tanh(x - c - i gamma),  G = b sech(x - c - i gamma)
///   II:  F = coth(x - c - i gamma),  G = b cosech(x - c - i gamma)
///   III: F = sign,                   G = b exp(-sign * x)
/// with b = b_R + i b_I and gamma restricted to [-pi/4, pi/4).
struct Sl2cFamily {
    Sl2cCase case_tag = Sl2cCase::I;
    double m = 1.0;
    double b_R = 0.0;
    double b_I = 0.0;
    double c = 0.0;
    double gamma = 0.0;
    int sign = +1; // case III branch only

    complex b() const { return complex(b_R, b_I); }
    Sl2cFamily with_m(double new_m) const {
        Sl2cFamily f = *this;
        f.m = new_m;
        return f;
    }
};

/// Throws std::invalid_argument on out-of-range gamma or sign.
void validate(const Sl2cFamily& family);

/// (F(x), G(x)).  Throws std::domain_error at the case II singularity
/// (x = c with gamma = 0) or any non-finite value.
std::pair<complex, complex> eval_F_G(const Sl2cFamily& family, double x);

/// dF/dx and dG/dx through the defining relations F' = 1 - F^2, G' = -F G.
std::pair<complex, complex> eval_F_G_derivatives(const Sl2cFamily& family, double x);

/// (max |F' - (1 - F^2)|, max |G' + F G|) with derivatives taken by central
/// differences on the grid; O(h^2) for exact family members.  perturb_F is a
/// constant offset added to the F samples so the check is falsifiable.
std::pair<double, double> constraint_residual(const Sl2cFamily& family, const Grid& grid,
                                              double perturb_F = 0.0);

/// V_m = -(m - 1/2)(m + 1/2)(1 - F^2) - 2 m F G + G^2.
SampledFunction potential_Vm(const Sl2cFamily& family, const Grid& grid);

/// The same potential through the per-case closed forms (sech/cosech/Morse).
SampledFunction potential_Vm_closed(const Sl2cFamily& family, const Grid& grid);

struct FamilySpectrum {
    double m = 0.0;
    std::vector<std::pair<int, double>> levels; // (n, E_n = -(m - n - 1/2)^2)
};

/// All levels with m - n - 1/2 > 0; empty for m <= 1/2.
FamilySpectrum family_spectrum(double m);

/// W = (m - 1/2) F - G with E_R = -(m - 1/2)^2, split into real and imaginary
/// parts with analytic derivatives.
SuperpotentialSpec bridge_superpotential(const Sl2cFamily& family);

/// max |W^2 + W' + E_R - V_{m-1}| over the grid: the shape-invariance defect,
/// which vanishes analytically.
double shape_invariance_residual(const Sl2cFamily& family, const Grid& grid);

} // namespace ptsusy
