#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hr/trial.hpp"
#include "hr/types.hpp"

namespace hr {

/// Twice continuously differentiable radial profile supported in [lo, hi].
struct RadialProfile {
    double lo = 0;
    double hi = 0;
    std::function<Derivatives2(double)> eval;
};

/// u(r) = s^3 (1-s)^3 * sum_j poly[j] s^j with s = (r-lo)/(hi-lo); zero outside.
/// Closed-form derivatives, C^2 across the support edges.
RadialProfile bump_profile(double lo, double hi, std::span<const double> poly);

/// Relative residuals of the two integration-by-parts identities behind the
/// per-mode reduction, for profiles supported away from the origin:
///   int (D_r u)^2 r^{N+m-1}  = int (u'')^2 r^{N+m-1} + (N-1)(1-m) int (u')^2 r^{N+m-3}
///   int (D_r u) u r^{N+m-3}  = -int (u')^2 r^{N+m-3} + (m-2)(N+m-4)/2 int u^2 r^{N+m-5}
/// with D_r u = u'' + (N-1)/r u'. Residuals are relative to the largest term.
struct IbpResiduals {
    double laplacian_identity = 0;
    double mixed_identity = 0;
};

IbpResiduals ibp_identity_check(const Parameters& p, const RadialProfile& u,
                                double tol = 1e-13);

/// Measured quotients of the two 1-d weighted Hardy inequalities:
///   ratio1 = int (u'')^2 r^{N+m-1} / int (u')^2 r^{N+m-3}  >= ((N+m-2)/2)^2
///   ratio2 = int (u')^2 r^{N+m-3} / int u^2 r^{N+m-5}      >= ((N+m-4)/2)^2
struct HardyRatios {
    double ratio1 = 0;
    double ratio2 = 0;
};

HardyRatios onedim_hardy_check(const Parameters& p, const RadialProfile& u,
                               double tol = 1e-13);

/// Same quotients for the trial family, whose support reaches the origin; the
/// singular inner parts are the exact power integrals.
HardyRatios onedim_hardy_check(const TrialSpec& spec, double tol = 1e-12);

}  // namespace hr
