#pragma once

#include <string>
#include <vector>

namespace ptsusy {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double elapsed_s = 0.0;
};

struct VerifyOptions {
    /// Constant offset injected into the F samples of the constraint checks;
    /// nonzero values must make them fail (falsifiability switch).
    double perturb = 0.0;
};

/// Runs the full analytic-claims suite: invariants and half-period of the
/// lemniscatic case, the partner-potential minimum and asymptotics, the
/// constraint ODEs of the three families, the quartic ODE of g, shape
/// invariance, the Scarf spectrum pair, both quasi-exact zero modes, the
/// intertwining residuals, the PT classification and the positive levels of
/// the elliptic H_+.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

} // namespace ptsusy
