#pragma once

#include "hr/types.hpp"

namespace hr {

/// Checks N >= 1 and m > 2 - N (strict). Throws std::invalid_argument naming
/// the violated constraint.
Parameters validate_parameters(int dimension, double exponent);

RegimeBoundaries regime_boundaries(int dimension);

/// Eigenvalue c_k = k (k + N - 2) of the sphere Laplacian. Requires N >= 2.
double sphere_eigenvalue(int dimension, int degree);

/// Index term I_k = (N+m-4)^2/2 + c_k - (m-2)(N+m-4). Its sign decides whether
/// degree k needs the compensated bound. Requires N >= 2.
double index_term(const Parameters& p, int degree);

/// Smallest degree k with I_k >= 0. Defined only in the high_bad regime
/// (throws std::domain_error elsewhere). Closed-form quadratic root followed
/// by an integer bracket check, so boundary rounding cannot shift the result.
int threshold_index(const Parameters& p);

/// Per-degree constant (-N+m-2l)^2 (2l+m+N-4)^2 / (4 (m+N-4)^2).
/// Throws std::domain_error at m = 4 - N where the denominator vanishes
/// (regime routing never reaches that point).
double branch_constant(const Parameters& p, int degree);

/// Correction eps_k = -4 c_k I_k / (N+m-4)^2, so that
/// ((N-m)/2)^2 - eps_k == branch_constant(p, k).
double branch_correction(const Parameters& p, int degree);

Regime classify_regime(const Parameters& p);

/// Sharp constant of the radial-derivative inequality, with the achieving
/// degree and (in high_bad) the per-degree table it minimizes over.
ConstantReport sharp_constant(const Parameters& p);

}  // namespace hr
