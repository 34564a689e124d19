#pragma once

#include <utility>
#include <vector>

#include "hr/banded.hpp"
#include "hr/types.hpp"

namespace hr {

/// Log-radius discretization window: uniform grid in t = log r on
/// [t_min, t_max]. Truncation acts as an essential boundary condition and
/// biases minima upward by Theta(1/T^2) for a window [-T, T].
struct GridSpec {
    double t_min = -15.0;
    double t_max = 15.0;
    int points = 4000;
};

inline constexpr GridSpec reference_grid{-15.0, 15.0, 4000};
inline constexpr GridSpec refined_grid{-30.0, 30.0, 8000};

struct ModeProblem {
    Parameters params;
    int mode = 0;     // spherical-harmonic degree; 0 only when N == 1
    GridSpec grid{};
};

/// Coefficients of a quadratic form built from the standard exponent family:
///   second * int (v'')^2 r^{N+m-1} + first * int (v')^2 r^{N+m-3}
///                                  + zeroth * int v^2 r^{N+m-5}.
struct FormCoefficients {
    double second = 0;
    double first = 0;
    double zeroth = 0;
};

/// Discretizes the form with second-order centered differences in r on the
/// log-spaced grid (chain-rule weights), essential conditions v = v' = 0 at
/// both window ends (two eliminated unknowns per side). The returned matrix
/// acts on the n-4 interior unknowns and has half-bandwidth 2.
///
/// Rows and columns are symmetrically rescaled by exp(-(N+m-4) t / 2); this is
/// a congruence applied identically to every form on the same grid, so
/// generalized eigenvalues and inertia are unchanged while entries stay O(1)
/// for any exponent.
BandedSymmetric assemble_radial_form(const GridSpec& grid, const Parameters& p,
                                     const FormCoefficients& c);

/// Numerator and denominator forms of the per-mode Rayleigh quotient.
std::pair<BandedSymmetric, BandedSymmetric> assemble_forms(const ModeProblem& problem);

struct SpectralResult {
    std::vector<std::pair<int, double>> per_mode;  // (degree, min quotient)
    double overall_min = 0;
    int argmin_mode = 0;
    GridSpec grid{};
};

/// Discrete minimum of the Rayleigh quotient over modes 0..k_max. For N = 1
/// only the radial problem exists and k_max is ignored. In high_bad, k_max
/// must reach threshold_index + 2; elsewhere at least 3.
SpectralResult oracle_constant(const Parameters& p, int k_max, const GridSpec& grid);

/// Default mode cap: threshold_index + 3 in high_bad, else 5.
int default_mode_cap(const Parameters& p);

struct ConvergenceRow {
    GridSpec grid{};
    double overall_min = 0;
    double gap = 0;  // overall_min - sharp_constant
};

std::vector<ConvergenceRow> convergence_study(const Parameters& p,
                                              const std::vector<GridSpec>& grids);

}  // namespace hr
