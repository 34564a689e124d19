#pragma once

#include <optional>

#include "hr/types.hpp"

namespace hr {

struct SeriesMinimum {
    double value = 0;
    int minimizer = 0;
};

/// Best constant of the full-gradient inequality as a minimum over sphere
/// eigenvalues, valid for N >= 5 and 4-N < m <= 0. The terms are eventually
/// increasing in k; the scan stops after three consecutive increases past the
/// running minimum (and k >= 3).
SeriesMinimum gradient_constant_series(int dimension, double exponent);

/// Explicitly known values of the full-gradient best constant. Returns
/// nullopt where only bounds or case subdivisions are available.
std::optional<double> gradient_constant_catalog(int dimension, double exponent);

/// Classical unweighted constants, as named lookups.
double hardy_constant(int dimension);          // (N-2)^2/4,   N >= 3
double rellich_constant(int dimension);        // (N(N-4)/4)^2, N >= 5
double hardy_rellich_constant(int dimension);  // N^2/4 | 3 | 25/36, N >= 3

struct ImprovementReport {
    double tilde_constant = 0;                   // radial-derivative sharp constant
    std::optional<double> prior_constant;        // full-gradient constant, when known
    std::optional<bool> strict_improvement;      // tilde > prior, when prior known
};

ImprovementReport improvement_report(const Parameters& p);

}  // namespace hr
