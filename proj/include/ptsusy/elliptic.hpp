#pragma once

#include "ptsusy/grid.hpp"
#include "ptsusy/numerics.hpp"
#include "ptsusy/susy.hpp"

namespace ptsusy {

/// Inputs of the elliptic construction: factorization energy E_R and the
/// integration constant a of (dg/dx)^2 = g ((4/3) g^3 - 4 E_R g + a).
struct EllipticParams {
    double E_R = 0.0;
    double a = 0.0;  // must be nonzero
    double c = 0.0;  // shift in z = x + c
};

enum class WRegime { nondegenerate_positive, nondegenerate_negative, degenerate };

struct WeierstrassData {
    double g2 = 0.0;
    double g3 = 0.0;
    CubicRoots roots;
    double D = 0.0;
    WRegime regime = WRegime::nondegenerate_positive;
    /// Real half-period; finite only for D > 0 (infinite in the degenerate
    /// case, NaN for D < 0).
    double omega = 0.0;
};

/// g2 = (4/3) E_R^2, g3 = (8/27) E_R^3 - a^2/12, cubic roots, discriminant
/// D = g2^3 - 27 g3^2 and regime.  |D| below 1e-10 * max(1, g2^3) with
/// E_R > 0 counts as degenerate; the roots then collapse to
/// {E_R/3, E_R/3, -2 E_R/3}.  For D > 0 the half-period is
/// omega = K(k) / sqrt(e1 - e3) with k^2 = (e2 - e3)/(e1 - e3).
WeierstrassData invariants_from(const EllipticParams& params);

/// Complete elliptic integral of the first kind by the arithmetic-geometric
/// mean; requires 0 <= k < 1.
double complete_elliptic_K(double k);

/// Jacobi sn, cn, dn for real argument by the descending Landen / AGM
/// recursion; requires 0 <= k < 1.
struct JacobiSnCnDn {
    double sn, cn, dn;
};
JacobiSnCnDn jacobi_elliptic(double u, double k);

/// wp(z) = e3 + (e1 - e3) / sn^2(z sqrt(e1 - e3), k): the non-degenerate
/// evaluation route, exposed for branch-continuity tests.
double wp_from_roots(double z, const CubicRoots& roots);

/// wp(z) = E_R (1/3 + cosech^2(sqrt(E_R) z)): the degenerate closed form.
double wp_degenerate(double z, double E_R);

/// Weierstrass wp on the physical domain: (0, 2 omega) in the
/// non-degenerate D > 0 regime, (0, inf) in the degenerate one.  Throws
/// unsupported_regime for D < 0 and std::domain_error outside the domain.
double wp(double z, const WeierstrassData& data);

/// wp' with |wp'| = sqrt(4 wp^3 - g2 wp - g3) and the sign fixed by position:
/// negative on (0, omega), zero at omega, positive on (omega, 2 omega).
/// The degenerate branch uses the closed-form derivative.
double wp_prime(double z, const WeierstrassData& data);

/// g(z) = (a/4) [wp(z) + E_R/3]^{-1}.
double g_of_z(double z, const EllipticParams& params, const WeierstrassData& data);

/// f(z) = g'/(2g) = -wp'(z) / (2 [wp(z) + E_R/3]).
double f_of_z(double z, const EllipticParams& params, const WeierstrassData& data);

/// The superpotential W = f + i g of the construction, with analytic
/// derivatives, for use with the susy module.
SuperpotentialSpec elliptic_superpotential(const EllipticParams& params,
                                           const WeierstrassData& data);

/// Partner pair with V(+)_I = V(-)_R = 0 identically:
///   V(+)_R = 2 [wp + E_R/3] - a^2 / (12 [wp + E_R/3]^2)
///   V(-)_I = -(a/2) wp' / [wp + E_R/3]^2
/// The degenerate branch uses the cosech/coth closed forms.
PartnerPair elliptic_pair(const EllipticParams& params, const WeierstrassData& data,
                          const Grid& grid);

/// |psi0| = (sqrt|a|/2) [wp + E_R/3]^{-1/2}: modulus of the known zero-energy
/// eigenfunction of H_-.  Non-degenerate samples are max-normalized;
/// degenerate ones keep K = 1 so the z -> inf plateau equals
/// zero_mode_plateau(params).
SampledFunction zero_mode_modulus(const EllipticParams& params, const WeierstrassData& data,
                                  const Grid& grid);

/// (1/2) sqrt(3 |a| / (2 E_R)): the degenerate-case plateau for K = 1.
double zero_mode_plateau(const EllipticParams& params);

} // namespace ptsusy
