#include "hr/fulldim.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hr/constants.hpp"
#include "hr/quadrature.hpp"
#include "hr/zonal.hpp"

namespace hr {

namespace {

double sq(double x) { return x * x; }

// Quadrature of zonal^2 over the sphere. Trapezoid on the circle is exact for
// trigonometric polynomials; Gauss-Legendre in cos(theta) is exact for the
// Legendre products, with the azimuthal 2*pi folded in.
double angular_square_norm(int dimension, int degree) {
    if (dimension == 2) {
        const int points = std::max(32, 4 * degree + 8);
        double total = 0.0;
        for (int j = 0; j < points; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / points;
            total += sq(zonal_eval(2, degree, theta));
        }
        return total * 2.0 * std::numbers::pi / points;
    }
    if (dimension == 3) {
        const QuadratureRule& rule = gauss_legendre(std::max(16, 2 * degree + 4));
        double total = 0.0;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            const double theta = std::acos(rule.nodes[j]);
            total += rule.weights[j] * sq(zonal_eval(3, degree, theta));
        }
        return total * 2.0 * std::numbers::pi;
    }
    throw std::invalid_argument("full-dimensional check implemented for N = 2, 3 only");
}

double relative_gap(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return 0.0;
    return std::abs(a - b) / scale;
}

}  // namespace

FulldimComparison fulldim_compare(int dimension, double exponent, int degree,
                                  const RadialProfile& u, double tol) {
    const Parameters p = validate_parameters(dimension, exponent);
    if (!(u.lo > 0.0))
        throw std::invalid_argument("profile must be supported away from the origin");

    const double n = dimension;
    const double m = exponent;
    const double c = sphere_eigenvalue(dimension, degree);

    // The integrand factorizes as (radial) x (zonal)^2, so the tensor-product
    // quadrature is the product of the two one-dimensional quadratures.
    const double angular = angular_square_norm(dimension, degree);

    const double lap_full = integrate_refined(
        [&](double r) {
            const Derivatives2 d = u.eval(r);
            const double lap = d.second + (n - 1.0) / r * d.first - c * d.value / (r * r);
            return sq(lap) * std::pow(r, n + m - 1.0);
        },
        u.lo, u.hi, tol).value;

    const double grad_full = integrate_refined(
        [&](double r) { return sq(u.eval(r).first) * std::pow(r, n + m - 3.0); },
        u.lo, u.hi, tol).value;

    const double j2 = integrate_refined(
        [&](double r) { return sq(u.eval(r).second) * std::pow(r, n + m - 1.0); },
        u.lo, u.hi, tol).value;
    const double j1 = grad_full;
    const double j0 = integrate_refined(
        [&](double r) { return sq(u.eval(r).value) * std::pow(r, n + m - 5.0); },
        u.lo, u.hi, tol).value;

    FulldimComparison out;
    out.lhs_full = angular * lap_full;
    out.lhs_decomposed = j2 + (2.0 * c + (n - 1.0) * (1.0 - m)) * j1 +
                         (c * c - c * (m - 2.0) * (n + m - 4.0)) * j0;
    out.rhs_full = angular * grad_full;
    out.rhs_decomposed = j1;
    out.lhs_gap = relative_gap(out.lhs_full, out.lhs_decomposed);
    out.rhs_gap = relative_gap(out.rhs_full, out.rhs_decomposed);
    return out;
}

}  // namespace hr
