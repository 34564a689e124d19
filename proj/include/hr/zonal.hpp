#pragma once

namespace hr {

/// Legendre polynomial P_l(x) by the three-term recurrence.
double legendre_p(int degree, double x);

/// Zonal (axisymmetric) spherical harmonic of the given degree, unit L^2 norm
/// on the sphere. theta is the polar angle. Only N = 2 and N = 3 are
/// supported; higher dimensions add nothing to the decomposition check since
/// the per-mode formulas depend on the degree only through the eigenvalue.
double zonal_eval(int dimension, int degree, double theta);

}  // namespace hr
