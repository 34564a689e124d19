#pragma once

#include "hr/identities.hpp"
#include "hr/types.hpp"

namespace hr {

/// Both sides of the inequality for u = U(r) * zonal harmonic, computed two
/// ways: full N-dimensional tensor quadrature (radial x angular) against the
/// per-mode radial formulas. Gaps are relative differences.
struct FulldimComparison {
    double lhs_full = 0;        // int |Lap u|^2 |x|^m
    double lhs_decomposed = 0;  // per-mode expression in U
    double rhs_full = 0;        // int |x . grad u|^2 |x|^{m-4}
    double rhs_decomposed = 0;  // int (U')^2 r^{N+m-3}
    double lhs_gap = 0;
    double rhs_gap = 0;
};

FulldimComparison fulldim_compare(int dimension, double exponent, int degree,
                                  const RadialProfile& u, double tol = 1e-12);

}  // namespace hr
