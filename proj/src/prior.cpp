#include "hr/prior.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hr/constants.hpp"

namespace hr {

namespace {

double sq(double x) { return x * x; }

bool near(double m, double boundary) {
    return std::abs(m - boundary) <= 1e-12 * std::max(1.0, std::abs(boundary));
}

}  // namespace

SeriesMinimum gradient_constant_series(int dimension, double exponent) {
    if (dimension < 5)
        throw std::invalid_argument("series formula requires N >= 5");
    if (!(exponent > 4.0 - dimension) || !(exponent <= 0.0))
        throw std::invalid_argument("series formula requires 4 - N < m <= 0");

    const double n = dimension;
    const double m = exponent;
    const double p = (n - 4.0 + m) * (n - m) / 4.0;
    const double q = sq((n - 4.0 + m) / 2.0);

    SeriesMinimum best{std::numeric_limits<double>::infinity(), 0};
    double prev = std::numeric_limits<double>::infinity();
    int rising = 0;
    for (int k = 0; k < 1000; ++k) {
        const double c = static_cast<double>(k) * (n + k - 2.0);
        const double term = sq(p + c) / (q + c);
        if (term < best.value) {
            best = {term, k};
            rising = 0;
        } else if (term > prev) {
            ++rising;
        }
        prev = term;
        if (rising >= 3 && k >= 3) break;
    }
    return best;
}

std::optional<double> gradient_constant_catalog(int dimension, double exponent) {
    const Parameters p = validate_parameters(dimension, exponent);
    const double n = p.dimension;
    const double m = p.exponent;

    if (dimension == 1) {
        // Known exactly on (1, 7/3] and [3, inf); in between only an upper
        // bound is available.
        if (m <= 7.0 / 3.0 + 1e-15 || m >= 3.0 - 1e-15)
            return sq((1.0 - m) / 2.0);
        return std::nullopt;
    }

    const RegimeBoundaries b = regime_boundaries(dimension);

    if (near(m, b.degenerate_exponent))
        return std::min(sq(n - 2.0), n - 1.0);

    // Above the prior threshold the full-gradient and radial-derivative
    // constants agree; past the upper middle boundary the stated equality
    // would exceed the radial constant, so the catalog ends there.
    if (m >= b.prior_threshold - 1e-12 && m <= b.middle_upper)
        return sq((n - m) / 2.0);

    if ((dimension <= 3 && m < b.prior_threshold) ||
        (dimension >= 4 && m <= b.degenerate_exponent)) {
        const double c1 = n - 1.0;
        return sq((n - 4.0 + m) * (n - m) / 4.0 + c1) / (sq((n - 4.0 + m) / 2.0) + c1);
    }

    return std::nullopt;
}

double hardy_constant(int dimension) {
    if (dimension < 3)
        throw std::invalid_argument("Hardy constant requires N >= 3");
    return sq(dimension - 2.0) / 4.0;
}

double rellich_constant(int dimension) {
    if (dimension < 5)
        throw std::invalid_argument("Rellich constant requires N >= 5");
    return sq(dimension * (dimension - 4.0) / 4.0);
}

double hardy_rellich_constant(int dimension) {
    if (dimension >= 5) return dimension * dimension / 4.0;
    if (dimension == 4) return 3.0;
    if (dimension == 3) return 25.0 / 36.0;
    throw std::invalid_argument("Hardy-Rellich constant requires N >= 3");
}

ImprovementReport improvement_report(const Parameters& p) {
    ImprovementReport rep;
    rep.tilde_constant = sharp_constant(p).value;
    rep.prior_constant = gradient_constant_catalog(p.dimension, p.exponent);
    if (!rep.prior_constant && p.dimension >= 5 &&
        p.exponent > 4.0 - p.dimension && p.exponent <= 0.0) {
        rep.prior_constant = gradient_constant_series(p.dimension, p.exponent).value;
    }
    if (rep.prior_constant)
        rep.strict_improvement = rep.tilde_constant > *rep.prior_constant;
    return rep;
}

}  // namespace hr
